"""Beauville-Bogomolov lattices, divisibility and Fujiki intersection numbers."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterator, Sequence

from .intlin import IntMatrix

#: Largest half-dimension for which matching sums are enumerated (10395 matchings).
MAX_HALF_DIM = 6


@dataclass(frozen=True)
class BBLattice:
    """``(H^2(X, Z), q)`` together with the Fujiki constant and ``n = dim X / 2``."""

    gram: IntMatrix
    fujiki_constant: Fraction
    half_dim: int

    def __post_init__(self):
        g = self.gram
        if not g.is_square or g != g.T:
            raise ValueError("Gram matrix must be square and symmetric")
        if g.det() == 0:
            raise ValueError("Gram matrix is degenerate")
        c = Fraction(self.fujiki_constant)
        if c <= 0:
            raise ValueError("Fujiki constant must be positive")
        object.__setattr__(self, "fujiki_constant", c)
        if self.half_dim < 1:
            raise ValueError("half_dim must be positive")

    @property
    def rank(self) -> int:
        return self.gram.rows

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        self._check(x)
        self._check(y)
        return sum(a * b for a, b in zip(x, self.gram @ y))

    def q(self, x: Sequence[int]) -> int:
        return self.pair(x, x)

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.rank:
            raise ValueError(f"vector of length {len(x)} in a rank {self.rank} lattice")


def hyperbolic_plane() -> IntMatrix:
    return IntMatrix([[0, 1], [1, 0]])


def rank_one(k: int) -> IntMatrix:
    """The rank one lattice ``<k>``."""
    return IntMatrix([[k]])


def orthogonal_sum(*grams: IntMatrix) -> IntMatrix:
    n = sum(g.rows for g in grams)
    out = [[0] * n for _ in range(n)]
    off = 0
    for g in grams:
        for i in range(g.rows):
            for j in range(g.cols):
                out[off + i][off + j] = g[i, j]
        off += g.rows
    return IntMatrix(out)


def kum2_lattice() -> BBLattice:
    """``U^3 + <-6>`` with ``c_X = 3`` for a fourfold of generalized Kummer type."""
    U = hyperbolic_plane()
    return BBLattice(orthogonal_sum(U, U, U, rank_one(-6)), Fraction(3), 2)


def divisibility(L: BBLattice, x: Sequence[int]) -> int:
    """``gcd { q(x, y) : y }``, i.e. the gcd of the entries of ``gram @ x``."""
    L._check(x)
    if not any(x):
        raise ValueError("divisibility of the zero vector is undefined")
    return reduce(gcd, L.gram @ x, 0)


def perfect_matchings(k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Perfect matchings of ``range(k)``; each matching is produced exactly once.

    The smallest unmatched index is paired with every larger unmatched index in
    turn, so there are ``(k - 1)!!`` results.
    """
    if k % 2:
        raise ValueError("odd number of points has no perfect matching")

    def rec(rest: tuple[int, ...]):
        if not rest:
            yield ()
            return
        first, tail = rest[0], rest[1:]
        for idx, partner in enumerate(tail):
            for m in rec(tail[:idx] + tail[idx + 1 :]):
                yield ((first, partner),) + m

    yield from rec(tuple(range(k)))


def fujiki_product(L: BBLattice, xs: Sequence[Sequence[int]]) -> Fraction:
    """``int_X x_1 ... x_2n`` via the polarized Fujiki relation.

    ``c_X`` times the sum over perfect matchings of the products of pairings.
    """
    n = L.half_dim
    if len(xs) != 2 * n:
        raise ValueError(f"expected {2 * n} classes, got {len(xs)}")
    if n > MAX_HALF_DIM:
        raise ValueError(f"matching enumeration capped at n = {MAX_HALF_DIM}")
    k = len(xs)
    pairing = [[L.pair(xs[i], xs[j]) for j in range(k)] for i in range(k)]
    total = 0
    for m in perfect_matchings(k):
        term = 1
        for i, j in m:
            term *= pairing[i][j]
            if not term:
                break
        total += term
    return L.fujiki_constant * total


def quotient_bb(L: BBLattice, group_order: int) -> BBLattice:
    """Lattice data of ``X/G`` for an ``H^2``-trivial group ``G``.

    The form is kept as is (it may be imprimitive); only ``c`` is divided.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    return replace(L, fujiki_constant=L.fujiki_constant / group_order)


def check_order_is_c_squared(c: Fraction | int, group_order: int) -> bool:
    return Fraction(group_order) == Fraction(c) ** 2
