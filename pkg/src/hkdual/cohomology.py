"""Integral cohomology of a real 2g-torus as the exterior algebra on ``H^1``.

Basis monomials ``e_I^* = e_{i1}^* ^ ... ^ e_{ik}^*`` are indexed by strictly
increasing 1-based tuples ``I``.  The top class ``e_1^* ^ ... ^ e_2g^*`` is the
default positive orientation.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .intlin import IntMatrix


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``idx`` (0 if an index repeats)."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return (-1) ** inversions, tuple(sorted(idx))


class ExtClass:
    """Sparse element of ``Lambda^* Z^{2g}``."""

    __slots__ = ("g", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, g: int = 2):
        self.g = g
        clean: dict[tuple[int, ...], int] = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if any(not 1 <= i <= 2 * g for i in key):
                raise ValueError(f"index out of range in {key}")
            sign, skey = _sort_sign(key)
            if sign and c:
                clean[skey] = clean.get(skey, 0) + sign * c
        self.terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def basis(cls, *idx: int, g: int = 2) -> "ExtClass":
        """``e_{i1}^* ^ ... ^ e_{ik}^*`` (indices in any order, sign applied)."""
        return cls({tuple(idx): 1}, g)

    @property
    def degree(self) -> int | None:
        """Degree if homogeneous, ``None`` for mixed or zero classes."""
        degs = {len(k) for k in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def _same_g(self, other: "ExtClass") -> None:
        if self.g != other.g:
            raise ValueError("classes live on tori of different dimension")

    def __add__(self, other: "ExtClass") -> "ExtClass":
        self._same_g(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return ExtClass(t, self.g)

    def __neg__(self) -> "ExtClass":
        return ExtClass({k: -v for k, v in self.terms.items()}, self.g)

    def __sub__(self, other: "ExtClass") -> "ExtClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "ExtClass":
        return ExtClass({key: k * v for key, v in self.terms.items()}, self.g)

    def __xor__(self, other: "ExtClass") -> "ExtClass":
        return wedge(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtClass) and self.g == other.g and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.g, tuple(self.terms.items())))

    def coefficient(self, *idx: int) -> int:
        sign, key = _sort_sign(idx)
        return sign * self.terms.get(key, 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.terms.items():
            name = "e" + "".join(map(str, k)) + "*" if k else "1"
            parts.append(f"{v}*{name}" if v != 1 else name)
        return " + ".join(parts).replace("+ -", "- ")


def wedge(a: ExtClass, b: ExtClass) -> ExtClass:
    a._same_g(b)
    out: dict[tuple[int, ...], int] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            sign, key = _sort_sign(ka + kb)
            if sign:
                out[key] = out.get(key, 0) + sign * va * vb
    return ExtClass(out, a.g)


def integrate(c: ExtClass, orientation: int = 1) -> int:
    """Coefficient of the top class; ``orientation=-1`` flips the fundamental class."""
    top = tuple(range(1, 2 * c.g + 1))
    return orientation * c.terms.get(top, 0)


def ample_class(d1: int, d2: int) -> ExtClass:
    """``l = d1 e_1^* ^ e_3^* + d2 e_2^* ^ e_4^*`` on an abelian surface of type ``(d1, d2)``."""
    if d1 < 1 or d2 < 1 or d2 % d1:
        raise ValueError("need positive d1 dividing d2")
    return ExtClass({(1, 3): d1, (2, 4): d2})


def degree_one_basis(g: int = 2) -> list[ExtClass]:
    return [ExtClass.basis(i, g=g) for i in range(1, 2 * g + 1)]


def poincare_dual_basis(g: int = 2) -> list[ExtClass]:
    """Basis ``b_i`` of ``H^{2g-1}`` with ``e_i^* ^ b_j = delta_ij`` times the top class.

    For ``g = 2`` this is ``e_234^*, -e_134^*, e_124^*, -e_123^*``.
    """
    n = 2 * g
    out = []
    for i in range(1, n + 1):
        rest = tuple(k for k in range(1, n + 1) if k != i)
        out.append((-1) ** (i - 1) * ExtClass.basis(*rest, g=g))
    return out


def coordinates(c: ExtClass, basis: Sequence[ExtClass]) -> tuple[int, ...]:
    """Coordinates of ``c`` in a basis made of signed monomials."""
    coords = []
    remaining = dict(c.terms)
    for b in basis:
        (key, sign), = b.terms.items()
        coords.append(sign * remaining.pop(key, 0))
    if any(remaining.values()):
        raise ValueError(f"{c!r} is not in the span of the basis")
    return tuple(coords)


def cup_with_l_matrix(l: ExtClass) -> IntMatrix:
    """Matrix of ``l ^ - : H^1 -> H^3`` in the bases ``e_i^*`` and :func:`poincare_dual_basis`."""
    if l.g != 2:
        raise ValueError("only abelian surfaces are supported")
    if not l.is_zero() and l.degree != 2:
        raise ValueError("l must be a degree-2 class")
    target = poincare_dual_basis(2)
    columns = [coordinates(wedge(l, e), target) for e in degree_one_basis(2)]
    return IntMatrix(columns).T


def poincare_pairing_matrix(g: int = 2) -> IntMatrix:
    """Pairing ``H^1 x H^{2g-1} -> Z`` between the standard and dual bases."""
    return IntMatrix([[integrate(wedge(a, b)) for b in poincare_dual_basis(g)] for a in degree_one_basis(g)])
