"""Polarized abelian surfaces: types, dual polarizations and their kernels.

Run with ``python demos/01_polarizations.py``.
"""

from hkdual.cohomology import ample_class, cup_with_l_matrix, integrate, wedge
from hkdual.intlin import IntMatrix
from hkdual.torus import (
    PolarizedTorus,
    TorusHom,
    dual_polarization,
    isogeny_kernel,
    polarization_type,
    standard_polarization,
)

# A polarization is an alternating form on the lattice. Hide the standard
# (1,3) form behind a unimodular change of basis and recover its type.
E = standard_polarization(1, 3)
B = IntMatrix([[1, 2, 0, 1], [0, 1, 0, 0], [3, 5, 1, 2], [0, 0, 0, 1]])
disguised = B.T @ E @ B
print("disguised form:\n" + str(disguised))
print("recovered type:", polarization_type(PolarizedTorus(disguised)))

# The dual polarization is d1 d2 times the inverse. Its kernel has order
# d1 d2 squared, split as two copies of Z/d1 + Z/d2.
for d1, d2 in [(1, 3), (2, 4), (1, 6)]:
    phi = TorusHom(standard_polarization(d1, d2))
    dual = dual_polarization(phi, d1 * d2)
    print(f"type ({d1},{d2}): ker phi = {isogeny_kernel(phi)},  ker dual = {isogeny_kernel(dual)}")

# Cupping with the ample class l is the same integer matrix as the dual.
l = ample_class(2, 4)
print("l ^ - on H^1 -> H^3:\n" + str(cup_with_l_matrix(l)))
print("dual polarization of type (2,4):\n" + str(dual_polarization(TorusHom(standard_polarization(2, 4)), 8).F))

# The self-intersection of l depends on which top class is called positive.
ll = wedge(l, l)
print("int l^2 against e1234:", integrate(ll), " against the complex orientation:", integrate(ll, orientation=-1))
