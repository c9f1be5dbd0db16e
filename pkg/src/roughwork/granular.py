"""Granular operator models: axiom checks, admissibility, granulation search.

A model carries an explicit granule list plus lower/upper operators given
as total tables, so non-classical operators are first-class citizens.
Admissibility bundles three conditions: representability of both operators
over the granules (decided through the generated field of sets), lower
stability of granules, and pairwise underlap inside definite supersets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from roughwork.approx import (
    ApproximationSpace,
    Subset,
    Universe,
    UniverseMismatchError,
)

SEARCH_CANDIDATE_CAP = 10**7


class SearchCapExceededError(RuntimeError):
    """The granulation search space exceeds the configured candidate cap."""


@dataclass(frozen=True)
class ParthoodPredicate:
    """Named binary predicate on subsets; default is plain inclusion."""

    name: str
    holds: Callable[[Subset, Subset], bool]

    def proper(self, a: Subset, b: Subset) -> bool:
        return self.holds(a, b) and not self.holds(b, a)


INCLUSION = ParthoodPredicate("inclusion", lambda a, b: a.is_subset_of(b))


class OperatorTable:
    """Total map from every subset of a universe to a subset."""

    __slots__ = ("universe", "_table")

    def __init__(self, universe: Universe, entries: dict[int, int]):
        size = 1 << universe.size
        if set(entries) != set(range(size)):
            raise ValueError("operator table must be total on the power set")
        for out in entries.values():
            if not 0 <= out < size:
                raise ValueError(f"table output {out:#x} out of range")
        self.universe = universe
        self._table = [entries[m] for m in range(size)]

    @classmethod
    def from_callable(
        cls, universe: Universe, fn: Callable[[Subset], Subset]
    ) -> OperatorTable:
        entries = {}
        for x in universe.subsets():
            out = fn(x)
            if out.universe != universe:
                raise UniverseMismatchError("operator output over foreign universe")
            entries[x.mask] = out.mask
        return cls(universe, entries)

    def __call__(self, x: Subset) -> Subset:
        if x.universe != self.universe:
            raise UniverseMismatchError(f"{x!r} not over the table's universe")
        return Subset(self.universe, self._table[x.mask])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OperatorTable)
            and self.universe == other.universe
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.universe.atoms, tuple(self._table)))


@dataclass(frozen=True)
class AxiomCheck:
    passed: bool
    witness: tuple | None = None

    def __post_init__(self):
        assert self.passed == (self.witness is None)


class AxiomReport:
    """Named axiom results; a failing axiom carries its first witness."""

    def __init__(self, results: dict[str, AxiomCheck]):
        self._results = dict(results)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self._results.values())

    def __getitem__(self, name: str) -> AxiomCheck:
        return self._results[name]

    def items(self):
        return self._results.items()

    def __repr__(self) -> str:
        bad = [n for n, c in self._results.items() if not c.passed]
        return f"<AxiomReport {'all pass' if not bad else 'failing: ' + ', '.join(bad)}>"


@dataclass(frozen=True)
class GranularModel:
    universe: Universe
    granules: tuple[Subset, ...]
    lower_op: OperatorTable
    upper_op: OperatorTable
    parthood: ParthoodPredicate = INCLUSION

    def __post_init__(self):
        if not self.granules:
            raise ValueError("granule list must be nonempty")
        for g in self.granules:
            if g.universe != self.universe:
                raise UniverseMismatchError("granule over a foreign universe")
            if g.is_empty:
                raise ValueError("granules must be nonempty")

    def lower(self, x: Subset) -> Subset:
        return self.lower_op(x)

    def upper(self, x: Subset) -> Subset:
        return self.upper_op(x)


def from_space(space: ApproximationSpace) -> GranularModel:
    universe = space.universe
    return GranularModel(
        universe=universe,
        granules=tuple(space.blocks),
        lower_op=OperatorTable.from_callable(universe, space.lower),
        upper_op=OperatorTable.from_callable(universe, space.upper),
    )


def check_gos_axioms(model: GranularModel, strict_upper: bool = False) -> AxiomReport:
    """The defining operator axioms, each with a first-failure witness.

    strict_upper additionally demands a^u to be a proper subset of a^uu,
    matching one printed reading that classical models cannot satisfy.
    """
    u = model.universe
    subsets = list(u.subsets())
    results: dict[str, AxiomCheck] = {}

    def scan(name: str, ok: Callable[[Subset], bool]) -> None:
        for x in subsets:
            if not ok(x):
                results[name] = AxiomCheck(False, (x,))
                return
        results[name] = AxiomCheck(True)

    scan("lower-contraction", lambda x: model.lower(x) <= x)
    scan("lower-idempotence", lambda x: model.lower(model.lower(x)) == model.lower(x))
    scan("upper-expansion", lambda x: x <= model.upper(x))
    if strict_upper:
        scan("upper-strict-expansion", lambda x: model.upper(x) < model.upper(model.upper(x)))
    else:
        scan("upper-weak-expansion", lambda x: model.upper(x) <= model.upper(model.upper(x)))

    def scan_monotone(name: str, op: Callable[[Subset], Subset]) -> None:
        for x in subsets:
            for y in subsets:
                if x <= y and not op(x) <= op(y):
                    results[name] = AxiomCheck(False, (x, y))
                    return
        results[name] = AxiomCheck(True)

    scan_monotone("lower-monotonicity", model.lower)
    scan_monotone("upper-monotonicity", model.upper)

    empty_ok = model.lower(u.empty).is_empty and model.upper(u.empty).is_empty
    results["empty-fixed"] = AxiomCheck(empty_ok, None if empty_ok else (u.empty,))
    top_ok = model.lower(u.full) <= u.full and model.upper(u.full) <= u.full
    results["top-bounded"] = AxiomCheck(top_ok, None if top_ok else (u.full,))
    return AxiomReport(results)


def check_operator_axioms(table: OperatorTable, kind: str) -> AxiomReport:
    """Standalone table discipline: lower-style or upper-style."""
    if kind not in ("lower", "upper"):
        raise ValueError(f"kind must be 'lower' or 'upper', got {kind!r}")
    u = table.universe
    subsets = list(u.subsets())
    results: dict[str, AxiomCheck] = {}

    def scan(name: str, ok: Callable[[Subset], bool]) -> None:
        for x in subsets:
            if not ok(x):
                results[name] = AxiomCheck(False, (x,))
                return
        results[name] = AxiomCheck(True)

    if kind == "lower":
        scan("non-increasing", lambda x: not x < table(x))
        scan("idempotence", lambda x: table(table(x)) == table(x))
    else:
        scan("increasing", lambda x: x <= table(x))
    name = "monotonicity"
    for x in subsets:
        hit = None
        for y in subsets:
            if x <= y and not table(x) <= table(y):
                hit = (x, y)
                break
        if hit:
            results[name] = AxiomCheck(False, hit)
            break
    else:
        results[name] = AxiomCheck(True)
    return AxiomReport(results)


def _signature_groups(universe: Universe, granules: Sequence[Subset]) -> list[int]:
    """Masks of the atom groups sharing a granule-membership signature.

    These groups are the atoms of the field of sets generated by the
    granules, so a subset lies in the field iff it splits no group.
    """
    buckets: dict[tuple[bool, ...], int] = {}
    for i, name in enumerate(universe.atoms):
        sig = tuple(name in g for g in granules)
        buckets[sig] = buckets.get(sig, 0) | (1 << i)
    return list(buckets.values())


def generated_field_contains(
    universe: Universe, granules: Sequence[Subset], x: Subset
) -> bool:
    for group in _signature_groups(universe, granules):
        inter = group & x.mask
        if inter != 0 and inter != group:
            return False
    return True


def generated_field_masks(universe: Universe, granules: Sequence[Subset]) -> set[int]:
    """The field by brute closure under union, intersection and complement.

    Independent of the signature route; the two must agree everywhere.
    """
    full = universe.full.mask
    masks = {0, full} | {g.mask for g in granules}
    while True:
        fresh = set()
        current = list(masks)
        for i, a in enumerate(current):
            c = a ^ full
            if c not in masks:
                fresh.add(c)
            for b in current[i:]:
                if a | b not in masks:
                    fresh.add(a | b)
                if a & b not in masks:
                    fresh.add(a & b)
        if not fresh:
            return masks
        masks |= fresh


@dataclass(frozen=True)
class AdmissibilityReport:
    wra: AxiomCheck
    ls: AxiomCheck
    fu: AxiomCheck

    @property
    def all_pass(self) -> bool:
        return self.wra.passed and self.ls.passed and self.fu.passed

    def flags(self) -> tuple[bool, bool, bool]:
        return (self.wra.passed, self.ls.passed, self.fu.passed)


def check_admissibility(model: GranularModel) -> AdmissibilityReport:
    """Representability, lower stability, and pairwise full underlap.

    Underlap quantifies over distinct granule pairs; the defining text
    glosses it as every two distinct granules sitting properly inside a
    common definite object, and a one-granule model holds vacuously.
    """
    u = model.universe
    groups = _signature_groups(u, model.granules)

    def in_field(x: Subset) -> bool:
        for group in groups:
            inter = group & x.mask
            if inter != 0 and inter != group:
                return False
        return True

    wra = AxiomCheck(True)
    for x in u.subsets():
        for out in (model.lower(x), model.upper(x)):
            if not in_field(out):
                wra = AxiomCheck(False, (x, out))
                break
        if not wra.passed:
            break

    ls = AxiomCheck(True)
    part = model.parthood
    for g in model.granules:
        for a in u.subsets():
            if part.holds(g, a) and not part.holds(g, model.lower(a)):
                ls = AxiomCheck(False, (g, a))
                break
        if not ls.passed:
            break

    fu = AxiomCheck(True)
    for x, y in combinations(model.granules, 2):
        found = False
        for z in u.subsets():
            if (
                part.proper(x, z)
                and part.proper(y, z)
                and model.lower(z) == z
                and model.upper(z) == z
            ):
                found = True
                break
        if not found:
            fu = AxiomCheck(False, (x, y))
            break
    return AdmissibilityReport(wra=wra, ls=ls, fu=fu)


def search_admissible_granulations(
    lower_op: OperatorTable,
    upper_op: OperatorTable,
    max_granules: int,
    parthood: ParthoodPredicate = INCLUSION,
    candidate_cap: int = SEARCH_CANDIDATE_CAP,
) -> list[tuple[Subset, ...]]:
    """All granule families of bounded size admissible for the given tables.

    Families are drawn from nonempty subsets in canonical order, so the
    result order is deterministic.  The candidate count is bounded up
    front; an oversized search raises instead of running forever.
    """
    if max_granules < 1:
        raise ValueError("max_granules must be at least 1")
    if lower_op.universe != upper_op.universe:
        raise UniverseMismatchError("operator tables over different universes")
    universe = lower_op.universe
    pool_size = (1 << universe.size) - 1
    total = sum(comb(pool_size, k) for k in range(1, max_granules + 1))
    if total > candidate_cap:
        raise SearchCapExceededError(
            f"{total} candidate families exceed the cap of {candidate_cap}"
        )
    pool = [Subset(universe, m) for m in range(1, 1 << universe.size)]
    # Representability only depends on the tables' distinct outputs, so a
    # cheap mask-level split test culls most families before the full check.
    outputs = {lower_op(x).mask for x in universe.subsets()}
    outputs |= {upper_op(x).mask for x in universe.subsets()}
    n = universe.size
    found = []
    for k in range(1, max_granules + 1):
        for family in combinations(pool, k):
            buckets: dict[tuple[int, ...], int] = {}
            for i in range(n):
                sig = tuple(g.mask >> i & 1 for g in family)
                buckets[sig] = buckets.get(sig, 0) | (1 << i)
            groups = list(buckets.values())
            if any(
                (group & out) not in (0, group)
                for out in outputs
                for group in groups
            ):
                continue
            model = GranularModel(
                universe=universe,
                granules=family,
                lower_op=lower_op,
                upper_op=upper_op,
                parthood=parthood,
            )
            if check_admissibility(model).all_pass:
                found.append(family)
    return found
