"""Exact integer linear algebra.

Everything here works over Python ``int``, so entries never overflow no matter
how much the Smith reduction makes them grow.  The central routine is
:func:`smith_normal_form`; cokernels, kernels modulo ``m`` and affine solution
counts are all read off from its diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix must have at least one row")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = ncols

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> "IntMatrix":
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        """Assemble a matrix from a grid of blocks with compatible shapes."""
        out = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("blocks in one row must share a height")
            for i in range(height):
                out.append([x for b in brow for x in b._data[i]])
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "IntMatrix":
        """Read either whitespace-separated rows or a bracketed literal.

        >>> IntMatrix.parse("1 2\\n3 4") == IntMatrix.parse("[[1,2],[3,4]]")
        True
        """
        s = text.strip()
        if s.startswith("["):
            import json

            return cls(json.loads(s))
        rows = [line.split() for line in s.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        return cls([[int(x) for x in r] for r in rows])

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def entries(self) -> tuple[int, ...]:
        """Row-major entries."""
        return tuple(x for r in self._data for x in r)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return all(self._data[i][j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    # -- arithmetic -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self) -> str:
        width = max(len(str(x)) for x in self.entries())
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self._data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * x for x in r] for r in self._data])

    def __rmul__(self, k: int) -> "IntMatrix":
        return self.scale(k)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other._data))
            return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._data])
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self._data)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(zip(*self._data))

    def mod(self, m: int) -> "IntMatrix":
        return IntMatrix([[x % m for x in r] for r in self._data])

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self._data]
        n = self.rows
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse_rational(self) -> list[list[Fraction]]:
        """Exact inverse over Q; raises ``ValueError`` if singular."""
        n = self.rows
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._data)]
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[k], a[piv] = a[piv], a[k]
            p = a[k][k]
            a[k] = [x / p for x in a[k]]
            for i in range(n):
                if i != k and a[i][k] != 0:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return [r[n:] for r in a]


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.D.diagonal_entries()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """Smith normal form with transformation matrices.

    The pivot at each stage is the entry of smallest nonzero absolute value in
    the remaining submatrix, ties broken by the lexicographically smallest
    (row, col).  This keeps the output a deterministic function of ``A``.

    >>> smith_normal_form(IntMatrix([[2, 4], [6, 8]])).diagonal
    (2, 4)
    """
    m, n = A.shape
    a = A.tolist()
    u = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()

    def row_addmul(dst: int, src: int, q: int) -> None:
        # row_dst -= q * row_src, mirrored on U
        if q:
            a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def col_addmul(dst: int, src: int, q: int) -> None:
        if q:
            for r in a:
                r[dst] -= q * r[src]
            for r in v:
                r[dst] -= q * r[src]

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                row_addmul(i, t, a[i][t] // p)
                dirty |= a[i][t] != 0
            for j in range(t + 1, n):
                col_addmul(j, t, a[t][j] // p)
                dirty |= a[t][j] != 0
            if dirty:
                continue
            # pivot must divide the rest of the block; otherwise fold the
            # offending row into row t and reduce again
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_addmul(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        if best is None:
            break

    return SmithForm(IntMatrix(u), IntMatrix(a), IntMatrix(v))


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group ``Z^free_rank + sum Z/d_i``.

    Invariant factors are stored canonically: every factor is at least 2 and
    each divides the next, so two isomorphic groups compare equal.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")
        object.__setattr__(self, "invariant_factors", fs)

    @classmethod
    def from_cyclic(cls, orders: Iterable[int], free_rank: int = 0) -> "FinAbGroup":
        """Canonicalize a direct sum of cyclic groups ``Z/o`` (``o == 0`` means ``Z``)."""
        orders = [abs(int(o)) for o in orders]
        free_rank += sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o > 1]
        if not finite:
            return cls(free_rank, ())
        diag = smith_normal_form(IntMatrix.diagonal(finite)).diagonal
        return cls(free_rank, tuple(d for d in diag if d > 1))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` for an infinite group."""
        return prod(self.invariant_factors) if self.is_finite else None

    @property
    def exponent(self) -> int | None:
        if not self.is_finite:
            return None
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def torsion_count(self, k: int) -> int:
        """Number of elements killed by ``k`` (finite groups only)."""
        if not self.is_finite:
            raise ValueError("infinite group")
        return prod(gcd(k, d) for d in self.invariant_factors)

    def direct_sum(self, other: "FinAbGroup") -> "FinAbGroup":
        return FinAbGroup.from_cyclic(self.invariant_factors + other.invariant_factors, self.free_rank + other.free_rank)

    def __pow__(self, k: int) -> "FinAbGroup":
        return FinAbGroup.from_cyclic(self.invariant_factors * k, self.free_rank * k)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " ⊕ ".join(parts) if parts else "0"


def cokernel(A: IntMatrix) -> FinAbGroup:
    """``Z^rows / A(Z^cols)`` in canonical form."""
    diag = smith_normal_form(A).diagonal
    zero_rows = A.rows - sum(1 for d in diag if d)
    return FinAbGroup(zero_rows, tuple(d for d in diag if d > 1))


def _square_check(A: IntMatrix) -> None:
    if not A.is_square:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")


def kernel_mod(A: IntMatrix, m: int) -> FinAbGroup:
    """Isomorphism type of ``{v in (Z/m)^k : A v = 0 mod m}`` for square ``A``.

    ``U A V = D`` with ``U, V`` invertible mod ``m``, so the kernel is that of
    ``D``, which is ``sum Z/gcd(d_i, m)``.
    """
    _square_check(A)
    if m < 2:
        raise ValueError("modulus must be at least 2")
    diag = smith_normal_form(A).diagonal
    return FinAbGroup.from_cyclic(gcd(d, m) for d in diag)


def kernel_mod_generators(A: IntMatrix, m: int) -> list[tuple[tuple[int, ...], int]]:
    """Generators of the kernel of ``A`` mod ``m`` paired with their orders.

    The kernel is the internal direct sum of the cyclic groups they generate.
    """
    _square_check(A)
    snf = smith_normal_form(A)
    gens = []
    for i, d in enumerate(snf.diagonal):
        g = gcd(d, m)
        if g == 1:
            continue
        step = m // g
        vec = tuple((step * snf.V[r, i]) % m for r in range(A.cols))
        gens.append((vec, g))
    return gens


def solve_affine_mod(A: IntMatrix, b: Sequence[int], m: int) -> int:
    """Count ``v in (Z/m)^cols`` with ``A v = b (mod m)``; zero if inconsistent."""
    if len(b) != A.rows:
        raise ValueError("right-hand side has the wrong length")
    if m < 1:
        raise ValueError("modulus must be positive")
    snf = smith_normal_form(A)
    c = snf.U @ b
    diag = snf.diagonal
    count = 1
    for i in range(A.rows):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, m)
        if c[i] % g:
            return 0
        if i < A.cols:
            count *= g
    count *= m ** max(0, A.cols - A.rows)
    return count
