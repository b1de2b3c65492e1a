"""Intersection numbers on a Kummer-type fourfold from its lattice alone.

Run with ``python demos/04_fujiki_and_lattices.py``.
"""

from hkdual.lattice_bb import divisibility, fujiki_product, kum2_lattice, quotient_bb

L = kum2_lattice()
print("Gram matrix of U^3 + <-6>:\n" + str(L.gram))

h = [1, 0, 0, 0, 0, 0, 0]  # isotropic: the pullback of a line from the base
x = [0, 1, 0, 0, 0, 0, 1]
print("q(h) =", L.q(h), " q(x) =", L.q(x), " q(h,x) =", L.pair(h, x))
print("div(x) =", divisibility(L, x), " div of the <-6> generator =", divisibility(L, [0] * 6 + [1]))

# Every product of four classes is c times a sum over perfect matchings.
print("int h^2 x^2 =", fujiki_product(L, [h, h, x, x]))
print("int x^4     =", fujiki_product(L, [x] * 4), "= 3 * 3 * q(x)^2")

# Quotienting by the 9 H^2-trivial translations keeps the form and divides c.
Q = quotient_bb(L, 9)
print("Fujiki constant of X/G:", Q.fujiki_constant)
print("int x^4 on X/G =", fujiki_product(Q, [x] * 4))
