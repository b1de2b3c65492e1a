"""Polarized complex tori as integral data.

A torus ``R^2g / Z^2g`` is carried by its lattice; a polarization is an
alternating integral form ``E`` on that lattice, and homomorphisms are integer
matrices.  The kernel of an isogeny ``F`` is identified with the lattice
cokernel ``Z^2g / F(Z^2g)`` (both are ``F^{-1}(Z^2g) / Z^2g`` up to iso).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .intlin import FinAbGroup, IntMatrix, cokernel, smith_normal_form

POSITIVE_DIMENSIONAL = "positive-dimensional"


def standard_polarization(*types: int) -> IntMatrix:
    """Block form ``[[0, D], [-D, 0]]`` with ``D = diag(types)``.

    For ``g = 2`` this is the polarization isogeny of an abelian surface of type
    ``(d1, d2)`` in a symplectic basis.
    """
    g = len(types)
    D = IntMatrix.diagonal(types)
    Z = IntMatrix.zeros(g, g)
    return IntMatrix.block([[Z, D], [-D, Z]])


def standard_dual_polarization(d1: int, d2: int) -> IntMatrix:
    """``[[0, -diag(d2, d1)], [diag(d2, d1), 0]]``, equal to ``d1 d2 * phi^{-1}``."""
    D = IntMatrix.diagonal([d2, d1])
    Z = IntMatrix.zeros(2, 2)
    return IntMatrix.block([[Z, -D], [D, Z]])


@dataclass(frozen=True)
class PolarizedTorus:
    E: IntMatrix

    def __post_init__(self):
        E = self.E
        if not E.is_square or E.rows % 2:
            raise ValueError("polarization must be a square matrix of even size")
        if E.T != -E or any(E[i, i] for i in range(E.rows)):
            raise ValueError("polarization must be alternating")
        if E.det() == 0:
            raise ValueError("polarization is degenerate")

    @property
    def g(self) -> int:
        return self.E.rows // 2

    @classmethod
    def of_type(cls, *types: int) -> "PolarizedTorus":
        return cls(standard_polarization(*types))


@dataclass(frozen=True)
class TorusHom:
    F: IntMatrix

    @property
    def is_isogeny(self) -> bool:
        return self.F.is_square and self.F.det() != 0

    def __matmul__(self, other: "TorusHom") -> "TorusHom":
        return TorusHom(self.F @ other.F)


def symplectic_normal_form(E: IntMatrix) -> tuple[IntMatrix, tuple[int, ...]]:
    """Return ``(B, d)`` with ``B`` unimodular and ``B.T @ E @ B == standard_polarization(*d)``.

    Works by repeatedly taking the pairing of smallest absolute value as the
    next hyperbolic pair ``(e, f)`` and clearing every other pairing with ``e``
    and ``f`` by Euclidean steps.  When the pivot fails to divide a pairing in
    the rest of the lattice, that vector is added to ``e`` and the reduction
    starts over with a strictly smaller pivot.
    """
    n = E.rows
    if E.T != -E:
        raise ValueError("form is not alternating")
    a = E.tolist()
    B = IntMatrix.identity(n).tolist()  # columns are the current basis

    def add(dst: int, src: int, q: int) -> None:
        # basis vector dst += q * basis vector src, congruence on the Gram matrix
        if not q:
            return
        for r in B:
            r[dst] += q * r[src]
        for k in range(n):
            a[dst][k] += q * a[src][k]
        for k in range(n):
            a[k][dst] += q * a[k][src]

    def swap(i: int, j: int) -> None:
        if i == j:
            return
        for r in B:
            r[i], r[j] = r[j], r[i]
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]

    def negate(i: int) -> None:
        for r in B:
            r[i] = -r[i]
        a[i] = [-x for x in a[i]]
        for r in a:
            r[i] = -r[i]

    types = []
    for t in range(0, n, 2):
        while True:
            best = None
            for i in range(t, n):
                for j in range(i + 1, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                raise ValueError("polarization is degenerate")
            _, i, j = best
            swap(t, i)
            swap(t + 1, j if j != t else i)
            if a[t][t + 1] < 0:
                negate(t + 1)
            p = a[t][t + 1]
            dirty = False
            for k in range(t + 2, n):
                # E(e, v_k) and E(f, v_k): subtract multiples of f and e
                add(k, t + 1, -(a[t][k] // p))
                add(k, t, a[t + 1][k] // p)
                dirty |= bool(a[t][k] or a[t + 1][k])
            if dirty:
                continue
            bad = next(
                (k for k in range(t + 2, n) for l in range(k + 1, n) if a[k][l] % p),
                None,
            )
            if bad is None:
                break
            add(t, bad, 1)
        types.append(a[t][t + 1])

    # reorder (e1, f1, e2, f2, ...) into (e1, e2, ..., f1, f2, ...)
    order = list(range(0, n, 2)) + list(range(1, n, 2))
    Bm = IntMatrix(B)
    P = IntMatrix([[1 if order[j] == i else 0 for j in range(n)] for i in range(n)])
    return Bm @ P, tuple(types)


def polarization_type(T: PolarizedTorus) -> tuple[int, ...]:
    """Elementary divisors ``d1 | d2 | ... | dg`` of the polarization."""
    return symplectic_normal_form(T.E)[1]


def polarization_isogeny(T: PolarizedTorus) -> TorusHom:
    """``E`` read as the lattice map ``H_1(S) -> H_1(S^) = H^1(S)`` in the dual basis."""
    return TorusHom(T.E)


def dual_polarization(phi: TorusHom, degree_product: int) -> TorusHom:
    """``(d1 d2) * phi^{-1}`` for an abelian surface of type ``(d1, d2)``.

    Raises ``ValueError`` when the result is not integral, which means
    ``degree_product`` is not ``d1 * d2`` for this polarization.
    """
    F = phi.F
    if F.shape != (4, 4):
        raise ValueError("dual polarization is only defined for abelian surfaces")
    if not phi.is_isogeny:
        raise ValueError("not an isogeny")
    inv = F.inverse_rational()
    out = []
    for row in inv:
        r = []
        for x in row:
            y = x * degree_product
            if y.denominator != 1:
                raise ValueError(f"d1*d2 = {degree_product} does not give an integral dual")
            r.append(y.numerator)
        out.append(r)
    return TorusHom(IntMatrix(out))


def isogeny_kernel(F: TorusHom) -> FinAbGroup:
    if not F.is_isogeny:
        raise ValueError("kernel is only finite for isogenies")
    return cokernel(F.F)


def affine_fixed_points(M: IntMatrix, x: Sequence[Fraction | int]) -> int | str:
    """Fixed points of ``y -> M y + x`` on ``R^2g / Z^2g``.

    Returns the number of fixed points, ``0`` when there are none, or
    :data:`POSITIVE_DIMENSIONAL` when the fixed locus has positive dimension.
    ``x`` is a torsion point given by rational coordinates.
    """
    n = M.rows
    if not M.is_square or len(x) != n:
        raise ValueError("dimension mismatch")
    x = [Fraction(t) for t in x]
    A = M - IntMatrix.identity(n)
    det = A.det()
    if det:
        return abs(det)
    # (M - I) y = -x mod Z^n; write U A V = D, y = V z
    snf = smith_normal_form(A)
    den = lcm(*(t.denominator for t in x))
    rhs = snf.U @ [-(t * den).numerator for t in x]
    for i, d in enumerate(snf.diagonal + (0,) * (n - len(snf.diagonal))):
        if d == 0 and rhs[i] % den:
            return 0
    return POSITIVE_DIMENSIONAL
