"""Generalized negation analysis on finite bounded posets.

Carries the condition checks N1 through N6 and N9 under weak-equality
semantics (an equation with an undefined side never fails), iterate
index bookkeeping, interior composition, an exhaustive falsification
harness over small distributive lattices, and the dialectical predicate
laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

import numpy as np

from roughwork.granular import AxiomCheck, AxiomReport

FALSIFY_SIZE_CAP = 6
CLAIM_IDS = (
    "no-index-0-n",
    "n123-bottom-top",
    "n123-not-n9-witness",
    "n9-implies-n123",
)
CONDITION_NAMES = ("N1", "N2", "N3", "N4", "N5", "N6", "N9")


class SearchTooLargeError(RuntimeError):
    """The falsification search exceeds the configured size bound."""


class PreconditionError(ValueError):
    """A composition precondition fails; the message names the law."""


class BoundedPoset:
    """Finite poset with a least element and partial meet/join.

    Meet and join are the infimum and supremum where those exist; the
    lattice and distributivity flags are derived, not declared.
    """

    def __init__(self, elements: Sequence, leq_pairs: Iterable[tuple]):
        self.elements = tuple(elements)
        if not self.elements or len(set(self.elements)) != len(self.elements):
            raise ValueError("elements must be nonempty and distinct")
        self._index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for a, b in leq_pairs:
            rel[self._index[a]][self._index[b]] = True
        for i in range(n):
            for j in range(n):
                if i != j and rel[i][j] and rel[j][i]:
                    raise ValueError("order is not antisymmetric")
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            raise ValueError("order is not transitive")
        self._rel = rel
        bottoms = [i for i in range(n) if all(rel[i])]
        if not bottoms:
            raise ValueError("poset has no least element")
        self._bottom = bottoms[0]
        tops = [i for i in range(n) if all(rel[j][i] for j in range(n))]
        self._top = tops[0] if tops else None
        self._meet = [[self._extreme(i, j, True) for j in range(n)] for i in range(n)]
        self._join = [[self._extreme(i, j, False) for j in range(n)] for i in range(n)]

    def _extreme(self, i: int, j: int, lower: bool) -> int | None:
        n = len(self.elements)
        if lower:
            bounds = [k for k in range(n) if self._rel[k][i] and self._rel[k][j]]
            best = [g for g in bounds if all(self._rel[k][g] for k in bounds)]
        else:
            bounds = [k for k in range(n) if self._rel[i][k] and self._rel[j][k]]
            best = [g for g in bounds if all(self._rel[g][k] for k in bounds)]
        return best[0] if best else None

    @classmethod
    def chain(cls, labels: Sequence) -> BoundedPoset:
        labels = list(labels)
        pairs = [
            (labels[i], labels[j])
            for i in range(len(labels))
            for j in range(i + 1, len(labels))
        ]
        return cls(labels, pairs)

    @classmethod
    def boolean_lattice(cls, atom_count: int) -> BoundedPoset:
        """Power set of ``atom_count`` atoms, elements coded as bit masks."""
        els = list(range(1 << atom_count))
        pairs = [(a, b) for a in els for b in els if a | b == b and a != b]
        return cls(els, pairs)

    @property
    def bottom(self):
        return self.elements[self._bottom]

    @property
    def top(self):
        return None if self._top is None else self.elements[self._top]

    def leq(self, a, b) -> bool:
        return self._rel[self._index[a]][self._index[b]]

    def meet(self, a, b):
        got = self._meet[self._index[a]][self._index[b]]
        return None if got is None else self.elements[got]

    def join(self, a, b):
        got = self._join[self._index[a]][self._index[b]]
        return None if got is None else self.elements[got]

    @property
    def is_lattice(self) -> bool:
        return all(
            v is not None for row in self._meet for v in row
        ) and all(v is not None for row in self._join for v in row)

    @property
    def is_distributive(self) -> bool | None:
        """True/False for lattices, None otherwise."""
        if not self.is_lattice:
            return None
        for x in self.elements:
            for y in self.elements:
                for z in self.elements:
                    left = self.meet(x, self.join(y, z))
                    right = self.join(self.meet(x, y), self.meet(x, z))
                    if left != right:
                        return False
        return True

    def __repr__(self) -> str:
        return f"<BoundedPoset {list(self.elements)}>"


class UnaryOp:
    """Partial unary map; ``None`` marks an undefined value."""

    def __init__(self, mapping: dict):
        self.mapping = dict(mapping)

    @classmethod
    def total(cls, elements: Iterable, fn: Callable) -> UnaryOp:
        return cls({x: fn(x) for x in elements})

    def defined(self, x) -> bool:
        return x in self.mapping

    def __call__(self, x):
        return self.mapping.get(x)

    def iterate(self, x, times: int):
        for _ in range(times):
            if x is None:
                return None
            x = self.mapping.get(x)
        return x

    def __repr__(self) -> str:
        return f"UnaryOp({self.mapping!r})"


@dataclass(frozen=True)
class NegationProfile:
    """Condition report plus the iterate index bookkeeping."""

    checks: AxiomReport
    index: tuple[int, int] | None
    period: int | None
    pace: int | None

    def __post_init__(self):
        assert self.checks["N5"].passed == (self.index is not None)
        if self.index is not None:
            m, n = self.index
            assert self.period == n and self.pace == n - m

    def passed(self, name: str) -> bool:
        return self.checks[name].passed


def _weak_equal_maps(left: tuple, right: tuple) -> bool:
    return all(
        a is None or b is None or a == b for a, b in zip(left, right)
    )


def _iterate_index(elements: tuple, f: UnaryOp) -> tuple[int, int] | None:
    """Least n admitting m < n with f^m weakly equal to f^n pointwise."""
    maps = [tuple(elements)]
    seen = {maps[0]: 0}
    for _ in range(10000):
        nxt = tuple(None if v is None else f(v) for v in maps[-1])
        maps.append(nxt)
        for n in range(1, len(maps)):
            for m in range(n):
                if _weak_equal_maps(maps[m], maps[n]):
                    return m, n
        if nxt in seen:
            break
        seen[nxt] = len(maps) - 1
    return None


def check_negation(poset: BoundedPoset, f: UnaryOp) -> NegationProfile:
    """Decide N1-N6 and N9 exhaustively; undefined sides never falsify."""
    els = poset.elements
    carrier = set(els)
    for x, fx in f.mapping.items():
        if x not in carrier or fx not in carrier:
            raise ValueError(f"operation leaves the carrier at {x!r}")
    bot = poset.bottom
    results: dict[str, AxiomCheck] = {}

    def first(name: str, violations) -> None:
        witness = next(iter(violations), None)
        results[name] = AxiomCheck(witness is None, witness)

    first(
        "N1",
        (
            (x,)
            for x in els
            if f(x) is not None
            and poset.meet(x, f(x)) is not None
            and poset.meet(x, f(x)) != bot
        ),
    )
    first(
        "N2",
        (
            (x, y)
            for x in els
            for y in els
            if poset.leq(x, y)
            and f(x) is not None
            and f(y) is not None
            and not poset.leq(f(y), f(x))
        ),
    )
    first(
        "N3",
        (
            (x,)
            for x in els
            if f.iterate(x, 2) is not None and not poset.leq(x, f.iterate(x, 2))
        ),
    )
    first(
        "N4",
        (
            (x, y)
            for x in els
            for y in els
            if f(y) is not None
            and poset.leq(x, f(y))
            and f(x) is not None
            and not poset.leq(y, f(x))
        ),
    )
    index = _iterate_index(els, f)
    results["N5"] = AxiomCheck(index is not None, None if index else ("no-cycle",))

    def n6_violations():
        for x in els:
            for y in els:
                join = poset.join(x, y)
                left = None if join is None else f(join)
                fx, fy = f(x), f(y)
                right = (
                    None
                    if fx is None or fy is None
                    else poset.meet(fx, fy)
                )
                if left is not None and right is not None and left != right:
                    yield (x, y)

    first("N6", n6_violations())

    def n9_violations():
        for x in els:
            fx = f(x)
            if fx is None:
                continue
            for y in els:
                m = poset.meet(x, y)
                disjoint = m is None or m == bot
                if disjoint != poset.leq(y, fx):
                    yield (x, y)

    first("N9", n9_violations())

    if index is None:
        return NegationProfile(AxiomReport(results), None, None, None)
    m, n = index
    return NegationProfile(AxiomReport(results), index, n, n - m)


def check_interior(poset: BoundedPoset, i: UnaryOp) -> None:
    """Raise unless ``i`` is a total interior operator on the poset."""
    for x in poset.elements:
        ix = i(x)
        if ix is None:
            raise PreconditionError(f"interior operator undefined at {x!r}")
        if not poset.leq(ix, x):
            raise PreconditionError(f"interior contraction fails at {x!r}")
        if i(ix) != ix:
            raise PreconditionError(f"interior idempotence fails at {x!r}")
    for a in poset.elements:
        for b in poset.elements:
            if poset.leq(a, b) and not poset.leq(i(a), i(b)):
                raise PreconditionError(f"interior monotonicity fails at {a!r}, {b!r}")


def interior_compose(
    poset: BoundedPoset, f: UnaryOp, i: UnaryOp
) -> tuple[UnaryOp, AxiomCheck]:
    """Compose an interior with a regular negation; check g^4 = g^2."""
    profile = check_negation(poset, f)
    for name in ("N1", "N2", "N3"):
        if not profile.passed(name):
            raise PreconditionError(f"operation is not a regular negation: {name} fails")
    check_interior(poset, i)
    g = UnaryOp(
        {
            x: i(f(x))
            for x in poset.elements
            if f(x) is not None and i(f(x)) is not None
        }
    )
    witness = next(
        (
            (x,)
            for x in poset.elements
            if g.iterate(x, 4) is not None
            and g.iterate(x, 2) is not None
            and g.iterate(x, 4) != g.iterate(x, 2)
        ),
        None,
    )
    return g, AxiomCheck(witness is None, witness)


def _canonical_relation(n: int, rel_rows: list[int]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        image = sorted(
            (perm[i], perm[j])
            for i in range(n)
            for j in range(n)
            if i != j and rel_rows[i] >> j & 1
        )
        key = tuple(image)
        if best is None or key < best:
            best = key
    return best


def enumerate_lattices(n: int) -> list[BoundedPoset]:
    """All lattices with n elements, one per isomorphism class.

    Candidates are upper-triangular transitive relations (every finite
    poset admits a linear extension), filtered for unique bounds and
    total meet/join, then deduplicated by relabeling.
    """
    if n == 1:
        return [BoundedPoset([0], [])]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    seen: set[tuple] = set()
    for bits in range(1 << len(pairs)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rows[i] |= 1 << j
        ok = True
        for i in range(n):
            reach = rows[i]
            for j in range(n):
                if rows[i] >> j & 1 and rows[j] & ~reach:
                    ok = False
                    break
            if not ok:
                break
        if not ok or rows[0] != (1 << n) - 1:
            continue
        poset = BoundedPoset(
            list(range(n)),
            [(i, j) for i, j in pairs if rows[i] >> j & 1],
        )
        if not poset.is_lattice:
            continue
        canon = _canonical_relation(n, rows)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(poset)
    return out


def enumerate_distributive_lattices(n: int) -> list[BoundedPoset]:
    return [p for p in enumerate_lattices(n) if p.is_distributive]


@dataclass(frozen=True)
class FalsificationWitness:
    claim: str
    poset: BoundedPoset
    op: UnaryOp
    note: str


def _condition_masks(poset: BoundedPoset) -> tuple[np.ndarray, ...]:
    """Vectorized N1/N2/N3/N9 masks over every total unary map."""
    n = len(poset.elements)
    idx = {e: i for i, e in enumerate(poset.elements)}
    leq = np.array(
        [[poset.leq(a, b) for b in poset.elements] for a in poset.elements]
    )
    meet = np.array(
        [[idx[poset.meet(a, b)] for b in poset.elements] for a in poset.elements]
    )
    bot = idx[poset.bottom]
    maps = np.array(list(product(range(n), repeat=n)), dtype=np.int16)
    cols = np.arange(n)
    n1 = (meet[cols[None, :], maps] == bot).all(axis=1)
    n2 = np.ones(len(maps), dtype=bool)
    n9 = np.ones(len(maps), dtype=bool)
    for x in range(n):
        for y in range(n):
            if leq[x, y]:
                n2 &= leq[maps[:, y], maps[:, x]]
            n9 &= leq[y, maps[:, x]] == (meet[x, y] == bot)
    rows = np.arange(len(maps))[:, None]
    ff = maps[rows, maps]
    n3 = leq[cols[None, :], ff].all(axis=1)
    return maps, n1, n2, n3, n9


def falsify_theorem(
    claim_id: str, size_cap: int = 5
) -> FalsificationWitness | None:
    """Search small distributive lattices for the claim's witness.

    For impossibility claims the return value is a counterexample (and
    the expected outcome is None); for the non-implication claim it is
    the confirming operation.
    """
    if claim_id not in CLAIM_IDS:
        raise ValueError(f"unknown claim {claim_id!r}; expected one of {CLAIM_IDS}")
    if size_cap > FALSIFY_SIZE_CAP:
        raise SearchTooLargeError(
            f"size cap {size_cap} exceeds the bound {FALSIFY_SIZE_CAP}"
        )
    for n in range(1, size_cap + 1):
        for poset in enumerate_distributive_lattices(n):
            maps, n1, n2, n3, n9 = _condition_masks(poset)
            if claim_id == "no-index-0-n":
                # index (0, n) forces a permutation, so only scan those
                candidates = n1 & n2 & (np.sort(maps, axis=1) == np.arange(n)).all(axis=1)
                for row in maps[candidates]:
                    op = UnaryOp(dict(zip(poset.elements, (poset.elements[v] for v in row))))
                    profile = check_negation(poset, op)
                    m, k = profile.index
                    if m == 0 and k > 2:
                        return FalsificationWitness(
                            claim_id, poset, op, f"index (0, {k})"
                        )
            elif claim_id == "n123-bottom-top":
                idx = {e: i for i, e in enumerate(poset.elements)}
                bot, top = idx[poset.bottom], idx[poset.top]
                bad = (maps[:, bot] != top) | (maps[:, top] != bot)
                hits = n1 & n2 & n3 & bad
                if hits.any():
                    row = maps[np.flatnonzero(hits)[0]]
                    op = UnaryOp(dict(zip(poset.elements, (poset.elements[v] for v in row))))
                    return FalsificationWitness(
                        claim_id, poset, op, "regular yet moves the bounds wrongly"
                    )
            elif claim_id == "n123-not-n9-witness":
                hits = n1 & n2 & n3 & ~n9
                if hits.any():
                    row = maps[np.flatnonzero(hits)[0]]
                    op = UnaryOp(dict(zip(poset.elements, (poset.elements[v] for v in row))))
                    return FalsificationWitness(
                        claim_id, poset, op, "satisfies N1-N3 but not N9"
                    )
            else:
                hits = n9 & ~(n1 & n2 & n3)
                if hits.any():
                    row = maps[np.flatnonzero(hits)[0]]
                    op = UnaryOp(dict(zip(poset.elements, (poset.elements[v] for v in row))))
                    return FalsificationWitness(
                        claim_id, poset, op, "satisfies N9 but not all of N1-N3"
                    )
    return None


def check_dialectical_predicate(
    elements: Iterable,
    relation: Callable,
    aggregate: Callable,
) -> AxiomReport:
    """Commutativity, anti-reflexivity, and aggregation stability."""
    els = list(elements)
    results: dict[str, AxiomCheck] = {}
    witness = next(
        (
            (a, b)
            for a in els
            for b in els
            if bool(relation(a, b)) != bool(relation(b, a))
        ),
        None,
    )
    results["commutativity"] = AxiomCheck(witness is None, witness)
    witness = next(((a,) for a in els if relation(a, a)), None)
    results["anti-reflexivity"] = AxiomCheck(witness is None, witness)
    witness = next(
        (
            (a, b, c)
            for a in els
            for b in els
            if relation(a, b)
            for c in els
            if not relation(aggregate(a, c), aggregate(b, c))
        ),
        None,
    )
    results["aggregation"] = AxiomCheck(witness is None, witness)
    return AxiomReport(results)
