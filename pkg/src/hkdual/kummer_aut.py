"""Automorphism groups of generalized Kummer moduli constructions.

A construction is fixed by ``(n, d1, d2, s)``: an abelian surface ``S`` of
polarization type ``(d1, d2)`` with ``d1 d2 = n + 1`` and a nonzero class
``s``.  Torsion points ``x in S[n+1]`` and ``xi in S^[n+1]`` are integer
4-vectors mod ``n + 1``; the conditions ``phi(x) = 0`` and
``phi^(xi) = s x`` become congruences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .intlin import FinAbGroup, IntMatrix, cokernel, kernel_mod, kernel_mod_generators
from .torus import standard_dual_polarization, standard_polarization


@dataclass(frozen=True)
class ModuliConfig:
    n: int
    d1: int
    d2: int
    s: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.d1 < 1 or self.d2 % self.d1:
            raise ValueError("polarization type needs d1 | d2")
        if self.d1 * self.d2 != self.n + 1:
            raise ValueError(f"d1*d2 = {self.d1 * self.d2} but n+1 = {self.n + 1}")
        if self.s == 0:
            raise ValueError("s must be nonzero")

    @property
    def m(self) -> int:
        """Torsion level ``n + 1``."""
        return self.n + 1

    @property
    def satisfies_gcd(self) -> bool:
        """Whether ``gcd(d1, s) == 1``; other configs are still computed."""
        return gcd(self.d1, self.s) == 1

    @property
    def phi(self) -> IntMatrix:
        return standard_polarization(self.d1, self.d2)

    @property
    def phi_dual(self) -> IntMatrix:
        return standard_dual_polarization(self.d1, self.d2)


def valid_configs(max_m: int, s_values=None, require_gcd: bool = True):
    """All configs with ``n + 1 <= max_m``; ``s`` ranges over ``1..n+1`` by default."""
    for m in range(2, max_m + 1):
        for d1 in range(1, m + 1):
            if m % d1 or (m // d1) % d1:
                continue
            for s in s_values or range(1, m + 1):
                cfg = ModuliConfig(m - 1, d1, m // d1, s)
                if cfg.satisfies_gcd or not require_gcd:
                    yield cfg


def translation_block_matrix(cfg: ModuliConfig) -> IntMatrix:
    """``[[phi, 0], [-s I, phi^]]`` acting on ``(x, xi)``."""
    Z = IntMatrix.zeros(4, 4)
    return IntMatrix.block([[cfg.phi, Z], [IntMatrix.identity(4, -cfg.s), cfg.phi_dual]])


def translation_subgroup(cfg: ModuliConfig) -> FinAbGroup:
    """The group ``{(x, xi) : phi x = 0, phi^ xi = s x}`` of torsion pairs."""
    return kernel_mod(translation_block_matrix(cfg), cfg.m)


def translation_elements(cfg: ModuliConfig) -> list[tuple[int, ...]]:
    """Explicit list of the pairs ``(x, xi)`` as 8-tuples mod ``n + 1``."""
    m = cfg.m
    gens = kernel_mod_generators(translation_block_matrix(cfg), m)
    out = []
    for coeffs in product(*(range(o) for _, o in gens)):
        v = [0] * 8
        for c, (g, _) in zip(coeffs, gens):
            for i in range(8):
                v[i] += c * g[i]
        out.append(tuple(x % m for x in v))
    return sorted(set(out))


def aut_rel(cfg: ModuliConfig) -> FinAbGroup:
    """Automorphisms preserving the fibration: ``ker phi^ = coker phi^``."""
    return cokernel(cfg.phi_dual)


def minimal_isogeny_matrix(cfg: ModuliConfig) -> IntMatrix:
    """``(y, L) -> (s y - phi^ L, phi y)`` as the block matrix ``[[s I, -phi^], [phi, 0]]``."""
    return IntMatrix.block(
        [[IntMatrix.identity(4, cfg.s), -cfg.phi_dual], [cfg.phi, IntMatrix.zeros(4, 4)]]
    )


def factorization_partner_matrix(cfg: ModuliConfig) -> IntMatrix:
    """The isogeny killing the ineffective part: ``[[0, phi^], [-phi, s I]]``."""
    return IntMatrix.block(
        [[IntMatrix.zeros(4, 4), cfg.phi_dual], [-cfg.phi, IntMatrix.identity(4, cfg.s)]]
    )


def verify_factorization(cfg: ModuliConfig, partner: IntMatrix | None = None) -> bool:
    """Check ``M_phi @ M_psi == (n+1) I_8`` exactly."""
    psi = factorization_partner_matrix(cfg) if partner is None else partner
    return minimal_isogeny_matrix(cfg) @ psi == IntMatrix.identity(8, cfg.m)


@dataclass(frozen=True)
class SemidirectElement:
    """Element ``(epsilon, v)`` of ``{+-1} x| K`` with ``K`` written additively mod ``m``.

    The sign acts on ``K`` by inversion: ``(e1, a)(e2, b) = (e1 e2, a + e1 b)``.
    """

    epsilon: int
    v: tuple[int, ...]
    m: int

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        v = tuple((a + self.epsilon * b) % self.m for a, b in zip(self.v, other.v))
        return SemidirectElement(self.epsilon * other.epsilon, v, self.m)

    def inverse(self) -> "SemidirectElement":
        return SemidirectElement(self.epsilon, tuple((-self.epsilon * a) % self.m for a in self.v), self.m)

    @property
    def is_identity(self) -> bool:
        return self.epsilon == 1 and not any(self.v)


def involution_orbit_count(n: int = 2, acting: list[tuple[int, ...]] | None = None, cfg: ModuliConfig | None = None):
    """Involutions ``(-1, v)`` and their orbits under conjugation.

    ``acting`` defaults to the fibration-preserving translations ``(0, xi)``
    with ``phi^ xi = 0``.  Returns ``(involution_count, orbit_count)``.
    """
    if cfg is None:
        cfg = _default_config(n)
    m = cfg.m
    K = translation_elements(cfg)
    if acting is None:
        acting = [v for v in K if not any(v[:4])]
    invs = [SemidirectElement(-1, v, m) for v in K]
    for t in invs:
        if not (t * t).is_identity:
            raise AssertionError(f"{t} is not an involution")
    conj = [SemidirectElement(1, u, m) for u in acting]
    seen: set[tuple[int, ...]] = set()
    orbits = 0
    for t in invs:
        if t.v in seen:
            continue
        orbits += 1
        seen.update((h * t * h.inverse()).v for h in conj)
    return len(invs), orbits


def _default_config(n: int) -> ModuliConfig:
    # type (1, n+1) always exists and satisfies the gcd condition with s = 1
    return ModuliConfig(n, 1, n + 1, 1)
