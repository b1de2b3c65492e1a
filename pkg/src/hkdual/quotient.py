"""Finite group actions, fixed-point ledgers and quotient-singularity counts.

Groups in a :class:`FixedPointLedger` are finite abelian and presented as
``Z/m1 x ... x Z/mk``; an element is a tuple of residues.  That covers every
group quotiented by here (the fibration-preserving automorphisms are abelian).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import prod
from typing import Callable, Hashable, Iterable, Sequence

from .kummer_aut import ModuliConfig, translation_elements

LEDGER_SCHEMA_VERSION = 1


class InvalidAction(ValueError):
    pass


class LedgerError(ValueError):
    pass


class GroupAction:
    """A finite group acting on a finite set, stored as lookup tables."""

    def __init__(
        self,
        elements: Sequence[Hashable],
        op: Callable[[Hashable, Hashable], Hashable],
        points: Sequence[Hashable],
        act: Callable[[Hashable, Hashable], Hashable],
        identity: Hashable | None = None,
    ):
        self.elements = list(elements)
        self.points = list(points)
        self._gidx = {g: i for i, g in enumerate(self.elements)}
        self._pidx = {p: i for i, p in enumerate(self.points)}
        if len(self._gidx) != len(self.elements) or len(self._pidx) != len(self.points):
            raise InvalidAction("duplicate group elements or points")
        try:
            self.mult = [[self._gidx[op(g, h)] for h in self.elements] for g in self.elements]
            self.table = [[self._pidx[act(g, p)] for p in self.points] for g in self.elements]
        except KeyError as exc:
            raise InvalidAction(f"operation leaves the given sets: {exc}") from None
        ident = range(len(self.points))
        if identity is None:
            e = next((i for i, row in enumerate(self.mult) if row == list(range(len(self.elements)))), None)
        else:
            e = self._gidx.get(identity)
        if e is None:
            raise InvalidAction("no identity element")
        self.identity = self.elements[e]
        if self.table[e] != list(ident):
            raise InvalidAction("identity does not act trivially")
        for gi, hi in product(range(len(self.elements)), repeat=2):
            tg, th, tgh = self.table[gi], self.table[hi], self.table[self.mult[gi][hi]]
            if any(tg[th[p]] != tgh[p] for p in ident):
                raise InvalidAction(f"g.(h.x) != (gh).x for g={self.elements[gi]!r}, h={self.elements[hi]!r}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def act(self, g: Hashable, p: Hashable) -> Hashable:
        return self.points[self.table[self._gidx[g]][self._pidx[p]]]

    def fixed_points(self, g: Hashable) -> list[Hashable]:
        row = self.table[self._gidx[g]]
        return [self.points[i] for i, j in enumerate(row) if i == j]

    def stabilizer(self, p: Hashable) -> frozenset:
        pi = self._pidx[p]
        return frozenset(g for gi, g in enumerate(self.elements) if self.table[gi][pi] == pi)

    def orbits(self, subgroup: Iterable[Hashable] | None = None) -> list[list[Hashable]]:
        rows = self.table if subgroup is None else [self.table[self._gidx[g]] for g in subgroup]
        seen = [False] * len(self.points)
        out = []
        for start in range(len(self.points)):
            if seen[start]:
                continue
            orbit = sorted({row[start] for row in rows})
            for i in orbit:
                seen[i] = True
            out.append([self.points[i] for i in orbit])
        return out

    def restrict(self, points: Iterable[Hashable]) -> "GroupAction":
        """Restriction to a union of orbits."""
        pts = list(points)
        return GroupAction(self.elements, self._op, pts, self.act, self.identity)

    def _op(self, g, h):
        return self.elements[self.mult[self._gidx[g]][self._gidx[h]]]


def orbit_count(a: GroupAction) -> tuple[int, Counter]:
    """Number of orbits and a histogram ``{orbit size: count}``.

    The Burnside count ``(1/|G|) sum_g |Fix(g)|`` is recomputed and compared.
    """
    orbits = a.orbits()
    fixed_total = sum(sum(1 for i, j in enumerate(row) if i == j) for row in a.table)
    if fixed_total != len(orbits) * a.order:
        raise AssertionError(f"Burnside mismatch: {fixed_total}/{a.order} != {len(orbits)}")
    return len(orbits), Counter(len(o) for o in orbits)


# -- abelian groups as tuples ----------------------------------------------


def abelian_elements(moduli: Sequence[int]) -> list[tuple[int, ...]]:
    return list(product(*(range(m) for m in moduli)))


def _add(moduli):
    return lambda g, h: tuple((a + b) % m for a, b, m in zip(g, h, moduli))


def _neg(g, moduli):
    return tuple(-a % m for a, m in zip(g, moduli))


def _element_order(g, moduli) -> int:
    k, x = 1, tuple(g)
    while any(x):
        x = _add(moduli)(x, g)
        k += 1
    return k


def _cyclic(g, moduli) -> list[tuple[int, ...]]:
    return [tuple(k * a % m for a, m in zip(g, moduli)) for k in range(_element_order(g, moduli))]


@dataclass(frozen=True)
class FixedLocus:
    """Fixed set of one group element, explicit or declared.

    ``cardinality is None`` means the locus is positive dimensional.
    """

    points: tuple[Hashable, ...] | None = None
    cardinality: int | None = None
    euler: int | None = None

    def __post_init__(self):
        if self.points is not None:
            pts = tuple(self.points)
            object.__setattr__(self, "points", pts)
            if self.cardinality is None:
                object.__setattr__(self, "cardinality", len(pts))
            if self.euler is None:
                object.__setattr__(self, "euler", len(pts))
            if self.cardinality != len(pts):
                raise LedgerError("declared cardinality disagrees with the listed points")

    @property
    def explicit(self) -> bool:
        return self.points is not None


@dataclass
class FixedPointLedger:
    moduli: tuple[int, ...]
    loci: dict[tuple[int, ...], FixedLocus]
    action: GroupAction | None = None
    declared: dict = field(default_factory=dict)

    def __post_init__(self):
        self.moduli = tuple(self.moduli)
        loci = {}
        for g, loc in self.loci.items():
            g = tuple(x % m for x, m in zip(g, self.moduli))
            if not any(g):
                raise LedgerError("the identity has no entry in a fixed-point ledger")
            loci[g] = loc
        for g, loc in list(loci.items()):
            inv = _neg(g, self.moduli)
            other = loci.setdefault(inv, loc)
            if _locus_key(other) != _locus_key(loc):
                raise LedgerError(f"fixed loci of {g} and its inverse differ")
        self.loci = dict(sorted(loci.items()))

    @property
    def group_order(self) -> int:
        return prod(self.moduli)

    def nontrivial_elements(self) -> list[tuple[int, ...]]:
        return [g for g in abelian_elements(self.moduli) if any(g)]

    def locus(self, g) -> FixedLocus:
        g = tuple(x % m for x, m in zip(g, self.moduli))
        if g not in self.loci:
            raise LedgerError(f"no fixed-point data for {g}")
        return self.loci[g]

    def union_points(self) -> list[Hashable]:
        pts = []
        seen = set()
        for loc in self.loci.values():
            if not loc.explicit:
                raise LedgerError("union of fixed sets needs explicit points")
            for p in loc.points:
                if p not in seen:
                    seen.add(p)
                    pts.append(p)
        return pts

    def check_against_action(self) -> list[str]:
        """Disagreements between listed fixed points and the action, if any."""
        if self.action is None:
            return []
        problems = []
        for g, loc in self.loci.items():
            if loc.explicit and set(loc.points) != set(self.action.fixed_points(g)):
                problems.append(f"listed fixed points of {g} differ from the action")
        return problems

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        entries = []
        for g, loc in self.loci.items():
            e = {"element": list(g)}
            if loc.explicit:
                e["points"] = [str(p) for p in loc.points]
            else:
                e["cardinality"] = loc.cardinality
                e["euler"] = loc.euler
            entries.append(e)
        out = {"schemaVersion": LEDGER_SCHEMA_VERSION, "group": {"moduli": list(self.moduli)}, "fixedLoci": entries}
        if self.action is not None:
            gens = []
            for i in range(len(self.moduli)):
                g = tuple(int(i == j) for j in range(len(self.moduli)))
                gens.append({"element": list(g), "permutation": {str(p): str(self.action.act(g, p)) for p in self.action.points}})
            out["action"] = {"generators": gens}
        if self.declared:
            out["stepwise"] = dict(self.declared)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "FixedPointLedger":
        if data.get("schemaVersion") != LEDGER_SCHEMA_VERSION:
            raise LedgerError(f"unsupported ledger schemaVersion {data.get('schemaVersion')!r}")
        try:
            moduli = tuple(int(m) for m in data["group"]["moduli"])
            loci = {}
            for e in data["fixedLoci"]:
                g = tuple(int(x) for x in e["element"])
                if "points" in e:
                    loci[g] = FixedLocus(points=tuple(e["points"]))
                else:
                    loci[g] = FixedLocus(cardinality=e.get("cardinality"), euler=e.get("euler"))
        except (KeyError, TypeError) as exc:
            raise LedgerError(f"malformed ledger: {exc}") from None
        action = None
        if "action" in data:
            perms = {}
            for gen in data["action"]["generators"]:
                perms[tuple(gen["element"])] = gen["permutation"]
            action = _action_from_generators(moduli, perms)
        return cls(moduli, loci, action, dict(data.get("stepwise", {})))

    @classmethod
    def loads(cls, text: str) -> "FixedPointLedger":
        return cls.from_dict(json.loads(text))


def _locus_key(loc: FixedLocus):
    return (frozenset(loc.points) if loc.explicit else None, loc.cardinality, loc.euler)


def _action_from_generators(moduli, perms: dict) -> GroupAction:
    k = len(moduli)
    basis = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    if set(perms) != set(basis):
        raise LedgerError("action must list one permutation per standard generator")
    points = sorted(set().union(*(p.keys() for p in perms.values())))

    def act(g, p):
        for i, c in enumerate(g):
            perm = perms[basis[i]]
            for _ in range(c):
                p = perm[p]
        return p

    try:
        return GroupAction(abelian_elements(moduli), _add(moduli), points, act, tuple([0] * k))
    except (InvalidAction, KeyError) as exc:
        raise LedgerError(f"invalid action in ledger: {exc}") from None


def read_ledger(path) -> FixedPointLedger:
    with open(path, encoding="utf-8") as fh:
        return FixedPointLedger.loads(fh.read())


# -- the translation model for the Kummer fourfold -------------------------


def _coset_label(coset) -> str:
    return "|".join("".join(str(x) for x in v) for v in sorted(coset))


def kummer_translation_model(n: int = 2) -> FixedPointLedger:
    """Fixed loci of the fibration-preserving translations on a Kummer fourfold.

    The ambient torsion group is the 81-element translation group of the
    ``(n, d1, d2, s) = (2, 1, 3, 1)`` construction; ``G`` is its order 9
    subgroup of pairs ``(0, xi)``.  A nontrivial ``tau`` in ``G`` fixes the 27
    three-element sets ``{z, z + tau, z + 2 tau}``, and ``G`` acts on the
    union of these sets by translation.
    """
    if n != 2:
        raise ValueError("the translation model is only defined for n = 2")
    cfg = ModuliConfig(2, 1, 3, 1)
    m = cfg.m
    K = translation_elements(cfg)
    G = [v for v in K if not any(v[:4])]
    add = lambda a, b: tuple((x + y) % m for x, y in zip(a, b))  # noqa: E731
    g1 = next(v for v in G if any(v))
    span1 = {tuple(k * x % m for x in g1) for k in range(m)}
    g2 = next(v for v in G if v not in span1)
    embed = {
        (a, b): tuple((a * x + b * y) % m for x, y in zip(g1, g2)) for a, b in abelian_elements((m, m))
    }
    if sorted(embed.values()) != sorted(G):
        raise AssertionError("G is not generated by the chosen pair")

    cosets: dict[tuple[int, ...], list[frozenset]] = {}
    for g, tau in embed.items():
        if not any(g):
            continue
        sub = _cyclic(tau, (m,) * 8)
        cosets[g] = sorted({frozenset(add(z, h) for h in sub) for z in K}, key=sorted)

    all_sets = {c for cs in cosets.values() for c in cs}
    # a 3-element set invariant under two independent translations is impossible
    for g, h in combinations_with_replacement(cosets, 2):
        if embed[g] in _cyclic(embed[h], (m,) * 8):
            continue
        if set(cosets[g]) & set(cosets[h]):
            raise AssertionError("fixed sets of distinct cyclic subgroups meet")

    def act(g, c):
        return frozenset(add(z, embed[g]) for z in c)

    action = GroupAction(list(embed), _add((m, m)), sorted(all_sets, key=sorted), act, (0, 0))
    for p in action.points:
        if len(action.stabilizer(p)) != 3:
            raise AssertionError("model point with stabilizer of order != 3")
    loci = {g: FixedLocus(points=tuple(cs)) for g, cs in cosets.items()}
    ledger = FixedPointLedger((m, m), loci, action)
    problems = ledger.check_against_action()
    if problems:
        raise AssertionError(problems)
    return ledger


def labelled_copy(ledger: FixedPointLedger) -> FixedPointLedger:
    """Same ledger with frozenset points replaced by string labels, as written to files."""
    return FixedPointLedger.from_dict(_labelled_dict(ledger))


def _labelled_dict(ledger: FixedPointLedger) -> dict:
    lab = lambda p: _coset_label(p) if isinstance(p, frozenset) else str(p)  # noqa: E731
    d = ledger.to_dict()
    for e in d["fixedLoci"]:
        if "points" in e:
            e["points"] = [lab(p) for p in ledger.locus(tuple(e["element"])).points]
    if ledger.action is not None:
        for gen in d["action"]["generators"]:
            g = tuple(gen["element"])
            gen["permutation"] = {lab(p): lab(ledger.action.act(g, p)) for p in ledger.action.points}
    return d


def declared_dual_kummer_ledger() -> FixedPointLedger:
    """Declared data for ``G = (Z/3)^2``: 27 isolated fixed points per element.

    The stepwise inputs record the two-quotient count: the 27 points fixed by
    the first generator become 9 after the second quotient, which adds 9 new
    singular points.
    """
    loci = {g: FixedLocus(cardinality=27, euler=27) for g in abelian_elements((3, 3)) if any(g)}
    return FixedPointLedger((3, 3), loci, None, {"first": [1, 0], "second": [0, 1], "identifiedOrbits": 9, "newFixedPoints": 9})


# -- reports ---------------------------------------------------------------


@dataclass
class SingularityReport:
    stepwise: int
    burnside: int
    by_stabilizer: dict[str, int]
    stepwise_detail: dict[str, int]
    notes: list[str]

    @property
    def discrepancy(self) -> bool:
        return self.stepwise != self.burnside

    @property
    def status(self) -> str:
        return "FLAGGED" if self.discrepancy or self.notes and any("inconsistent" in n for n in self.notes) else "PASS"

    def to_dict(self) -> dict:
        return {
            "stepwise": self.stepwise,
            "burnside": self.burnside,
            "byStabilizer": self.by_stabilizer,
            "stepwiseDetail": self.stepwise_detail,
            "discrepancy": self.discrepancy,
            "status": self.status,
            "notes": list(self.notes),
        }


def singularity_report(ledger: FixedPointLedger, first=None, second=None) -> SingularityReport:
    """Singular points of ``X/G`` for a group with isolated fixed points.

    Two counts are produced.  The stepwise count quotients by ``first`` and
    then by ``second``: points fixed by ``first`` modulo ``second`` plus the
    new fixed points of ``second`` on the intermediate quotient.  The Burnside
    count is the number of ``G``-orbits on the union of all fixed sets.  When
    the ledger has explicit points every ingredient is computed; declared
    values in ``ledger.declared`` are used otherwise.
    """
    mod = ledger.moduli
    k = len(mod)
    basis = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    f = tuple(first or ledger.declared.get("first") or basis[0])
    f2 = tuple(second or ledger.declared.get("second") or basis[min(1, k - 1)])
    notes: list[str] = []
    for g in ledger.nontrivial_elements():
        if ledger.locus(g).cardinality is None:
            raise LedgerError(f"fixed locus of {g} is not isolated; no singularity count")

    if ledger.action is not None and all(loc.explicit for loc in ledger.loci.values()):
        notes += [f"inconsistent ledger: {p}" for p in ledger.check_against_action()]
        # points with nontrivial stabilizer form a union of orbits even when
        # the listed loci disagree with the action
        full = ledger.action
        sing = [p for p in full.points if len(full.stabilizer(p)) > 1]
        act = full.restrict(sing)
        orbits = act.orbits()
        fixed_total = sum(len(act.fixed_points(g)) for g in act.elements)
        if fixed_total != len(orbits) * act.order:
            notes.append("inconsistent ledger: Burnside identity fails")
        by_stab = Counter(_subgroup_name(act.stabilizer(o[0]), mod) for o in orbits)
        burnside = len(orbits)
        fix_f = act.fixed_points(f)
        fcyc = _cyclic(f, mod)
        f2cyc = _cyclic(f2, mod)
        identified = len({frozenset(act.act(h, p) for h in f2cyc) for p in fix_f})
        fset = set(fix_f)
        new_pts = [
            p for p in act.points
            if p not in fset and any(act.act(_add(mod)(f2, h), p) == p for h in fcyc)
        ]
        new = len({frozenset(act.act(h, p) for h in fcyc) for p in new_pts})
        first_count = len(fix_f)
    else:
        orders = {_element_order(g, mod) for g in ledger.nontrivial_elements()}
        if len(orders) != 1 or not _is_prime(next(iter(orders))):
            raise LedgerError("declared ledgers are supported for groups of prime exponent only")
        p = orders.pop()
        notes.append("union size assumes fixed sets of distinct cyclic subgroups are disjoint")
        card = {g: ledger.locus(g).cardinality for g in ledger.nontrivial_elements()}
        union = Fraction(sum(card.values()), p - 1)
        total = union + sum(card.values())
        if total % ledger.group_order or union.denominator != 1:
            notes.append("inconsistent ledger: Burnside count is not an integer")
        burnside = int(total // ledger.group_order)
        by_stab = Counter()
        for g in ledger.nontrivial_elements():
            name = _subgroup_name(frozenset(_cyclic(g, mod)), mod)
            by_stab[name] = card[g] * p // ledger.group_order
        first_count = card[f]
        if "identifiedOrbits" in ledger.declared:
            identified = int(ledger.declared["identifiedOrbits"])
        else:
            identified = first_count // _element_order(f2, mod)
            notes.append("assumed the second generator acts freely on the first fixed set")
        if "newFixedPoints" not in ledger.declared:
            raise LedgerError("declared ledger needs stepwise.newFixedPoints")
        new = int(ledger.declared["newFixedPoints"])

    return SingularityReport(
        stepwise=identified + new,
        burnside=burnside,
        by_stabilizer=dict(sorted(by_stab.items())),
        stepwise_detail={"firstQuotient": first_count, "identifiedOrbits": identified, "newFixedPoints": new},
        notes=notes,
    )


def _subgroup_name(sub: frozenset, moduli) -> str:
    gens = sorted(g for g in sub if any(g))
    return "<" + ",".join(str(x) for x in gens[0]) + ">" if gens else "1"


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % q for q in range(2, int(p**0.5) + 1))


def orbifold_euler(ledger: FixedPointLedger, e_X: int, group_order: int | None = None) -> Fraction:
    """``(1/|G|) sum_g e(X^g)`` with ``e(X^1) = e_X``."""
    order = ledger.group_order if group_order is None else group_order
    if order != ledger.group_order:
        raise LedgerError(f"group order {order} does not match the ledger ({ledger.group_order})")
    total = e_X
    for g in ledger.nontrivial_elements():
        loc = ledger.locus(g)
        if loc.euler is None:
            raise LedgerError(f"no Euler characteristic for the fixed locus of {g}")
        total += loc.euler
    return Fraction(total, order)


def symplectic_cyclic_local_types(order: int, dim: int) -> list[tuple[int, ...]]:
    """Exponent multisets ``(a_1..a_dim)`` of symplectic ``Z/order`` actions with isolated fixed point.

    The generator acts by ``diag(zeta^a_i)`` with every ``a_i`` nonzero.  A
    preserved symplectic form pairs ``zeta^a`` with ``zeta^-a``, so the
    multiplicities of ``a`` and ``-a`` agree, and a self-paired exponent
    (``2a = 0``) occurs an even number of times.
    """
    if not _is_prime(order):
        raise ValueError("order must be prime")
    if dim % 2 or not 0 < dim <= 8:
        raise ValueError("dimension must be even and at most 8")
    out = []
    for exps in combinations_with_replacement(range(1, order), dim):
        c = Counter(exps)
        ok = all(c[a] == c[(-a) % order] for a in c) and all(c[a] % 2 == 0 for a in c if 2 * a % order == 0)
        if ok:
            out.append(exps)
    return out


def local_type_name(order: int, exps: Sequence[int]) -> str:
    return f"1/{order}(" + ",".join(map(str, exps)) + ")"
