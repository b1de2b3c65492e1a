"""Dimension bookkeeping for LLV decompositions.

Weights of ``so(2r+1)`` (series ``B``) and ``so(2r)`` (series ``D``) are given
in the orthonormal basis ``e_1..e_r``.  Half-integers are kept as doubled
integers so nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


@dataclass(frozen=True)
class HighestWeight:
    series: str
    doubled: tuple[int, ...]

    def __post_init__(self):
        if self.series not in ("B", "D"):
            raise ValueError("series must be 'B' or 'D'")
        w = tuple(int(x) for x in self.doubled)
        object.__setattr__(self, "doubled", w)
        if not w:
            raise ValueError("rank must be positive")
        if len({x % 2 for x in w}) != 1:
            raise ValueError("weight entries must be all integers or all half-integers")
        vals = list(w)
        if self.series == "D":
            vals[-1] = abs(vals[-1])
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)) or vals[-1] < 0:
            raise ValueError(f"weight {self.weight} is not dominant for {self.algebra}")

    @classmethod
    def of(cls, series: str, *weight) -> "HighestWeight":
        """Build from integers, ``Fraction`` or strings like ``'1/2'``."""
        doubled = []
        for x in weight:
            d = Fraction(x) * 2
            if d.denominator != 1:
                raise ValueError(f"{x} is not a half-integer")
            doubled.append(d.numerator)
        return cls(series, tuple(doubled))

    @classmethod
    def for_dimension(cls, N: int, *weight) -> "HighestWeight":
        """Weight of ``so(N)``, padded with zeros to the rank."""
        series, rank = ("B", (N - 1) // 2) if N % 2 else ("D", N // 2)
        weight = list(weight) + [0] * (rank - len(weight))
        return cls.of(series, *weight)

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @property
    def weight(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    @property
    def algebra(self) -> str:
        r = self.rank
        return f"so({2 * r + 1})" if self.series == "B" else f"so({2 * r})"


def _positive_roots(series: str, r: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            for sgn in (-1, 1):
                v = [0] * r
                v[i], v[j] = 1, sgn
                roots.append(tuple(v))
        if series == "B":
            v = [0] * r
            v[i] = 1
            roots.append(tuple(v))
    return roots


def weyl_dim(w: HighestWeight) -> int:
    """``prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>``."""
    r = w.rank
    # doubled rho: B_r has rho_i = r - i + 1/2, D_r has rho_i = r - i
    rho2 = [2 * (r - i) + 1 for i in range(1, r + 1)] if w.series == "B" else [2 * (r - i) for i in range(1, r + 1)]
    num, den = 1, 1
    for alpha in _positive_roots(w.series, r):
        num *= sum((l + p) * a for l, p, a in zip(w.doubled, rho2, alpha))
        den *= sum(p * a for p, a in zip(rho2, alpha))
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError("Weyl dimension formula produced a non-integer")
    return q.numerator


@dataclass(frozen=True)
class GradedDims:
    dims: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def is_symmetric(self, top: int) -> bool:
        return all(self.dims.get(k, 0) == self.dims.get(top - k, 0) for k in range(top + 1))

    def as_list(self, top: int) -> list[int]:
        return [self.dims.get(k, 0) for k in range(top + 1)]


def verbitsky_profile(b2: int, n: int) -> GradedDims:
    """Degree profile of the Verbitsky component ``V_(n)`` on a ``2n``-fold with ``b_2 = b2``.

    Degree ``2k`` carries ``Sym^k H^2`` for ``k <= n`` and the profile is
    mirrored above the middle degree.  For ``n = 2`` the middle entry is
    checked against ``dim V_(2) - 2 - 2 b2``.
    """
    if n < 1 or b2 < 1:
        raise ValueError("need n >= 1 and b2 >= 1")
    dims = {}
    for k in range(n + 1):
        d = comb(b2 + k - 1, k)
        dims[2 * k] = d
        dims[4 * n - 2 * k] = d
    prof = GradedDims(dict(sorted(dims.items())))
    if n == 2:
        total = weyl_dim(HighestWeight.for_dimension(b2 + 2, 2))
        if dims[4] != total - 2 - 2 * b2:
            raise AssertionError("degree-4 piece disagrees with dim V_(2)")
    return prof


@dataclass(frozen=True)
class Summand:
    """``multiplicity`` copies of a module with the given degree placement.

    ``weight is None`` is the trivial module.  ``placement`` gives the
    dimension of one copy in each cohomological degree.
    """

    weight: HighestWeight | None
    multiplicity: int
    placement: dict[int, int]

    @property
    def dim(self) -> int:
        return 1 if self.weight is None else weyl_dim(self.weight)


def verbitsky_summand(b2: int, n: int) -> Summand:
    return Summand(HighestWeight.for_dimension(b2 + 2, n), 1, verbitsky_profile(b2, n).dims)


def trivial_summand(multiplicity: int, degree: int) -> Summand:
    return Summand(None, multiplicity, {degree: 1})


def spin_summand(rank: int, series: str, degrees: tuple[int, int]) -> Summand:
    """Spin module ``V_(1/2, ..., 1/2)`` split evenly between two odd degrees."""
    w = HighestWeight(series, (1,) * rank)
    half = weyl_dim(w) // 2
    return Summand(w, 1, {degrees[0]: half, degrees[1]: half})


@dataclass(frozen=True)
class BettiTable:
    betti: tuple[int, ...]
    total: int
    euler: int


def betti_table(decomposition: Sequence[Summand], top: int | None = None) -> BettiTable:
    """Betti numbers, total dimension and Euler characteristic of a decomposition."""
    if top is None:
        top = max((d for s in decomposition for d in s.placement), default=0)
    betti = [0] * (top + 1)
    for s in decomposition:
        if sum(s.placement.values()) != s.dim:
            raise ValueError(f"placement {s.placement} does not add up to dim {s.dim}")
        for deg, d in s.placement.items():
            if not 0 <= deg <= top:
                raise ValueError(f"degree {deg} outside 0..{top}")
            betti[deg] += s.multiplicity * d
    euler = sum((-1) ** k * b for k, b in enumerate(betti))
    return BettiTable(tuple(betti), sum(betti), euler)


KUM2_B2 = 7


def kum2_decomposition() -> list[Summand]:
    """``V_(2) + 80 Q + V_(1/2,1/2,1/2,1/2)`` for a generalized Kummer fourfold."""
    return [verbitsky_summand(KUM2_B2, 2), trivial_summand(80, 4), spin_summand(4, "B", (3, 5))]


def dual_kum2_decomposition() -> list[Summand]:
    """``V_(2) + 8 Q + V_(1/2,1/2,1/2,1/2)`` for its quotient by ``(Z/3)^2``."""
    return [verbitsky_summand(KUM2_B2, 2), trivial_summand(8, 4), spin_summand(4, "B", (3, 5))]


def reduced_middle_dimension(b2: int, trivial: int) -> int:
    """``dim H^4`` from ``Vbar_(2) + trivial Q`` for the reduced algebra ``so(b2)``."""
    return weyl_dim(HighestWeight.for_dimension(b2, 2)) + trivial
