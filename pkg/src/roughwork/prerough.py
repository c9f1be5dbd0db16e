"""Pre-rough and essential pre-rough algebras.

Two layers: the concrete quotient algebra a space induces on its rough
classes, and exhaustive axiom checkers for arbitrary finite candidate
structures given by operation tables.  Every quotient operation builds a
fresh RoughClass, so realizability (definite bounds, no singleton block
stranded in a boundary) is re-asserted on each result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from roughwork.approx import ApproximationSpace, RoughClass, Subset
from roughwork.granular import AxiomCheck, AxiomReport


class QuotientAlgebra:
    """The rough classes of a space under componentwise bound operations."""

    def __init__(self, space: ApproximationSpace):
        self.space = space
        self.carrier = tuple(space.rough_classes(include_empty=True))
        self.zero = space.rough_class_of(space.universe.empty)
        self.one = space.rough_class_of(space.universe.full)
        assert self.zero in self.carrier and self.one in self.carrier

    def _cls(self, lower: Subset, upper: Subset) -> RoughClass:
        return RoughClass(self.space, lower, upper)

    def meet(self, a: RoughClass, b: RoughClass) -> RoughClass:
        return self._cls(a.lower & b.lower, a.upper & b.upper)

    def join(self, a: RoughClass, b: RoughClass) -> RoughClass:
        return self._cls(a.lower | b.lower, a.upper | b.upper)

    def neg(self, a: RoughClass) -> RoughClass:
        return self._cls(a.upper.complement(), a.lower.complement())

    def necessity(self, a: RoughClass) -> RoughClass:
        return self._cls(a.lower, a.lower)

    def possibility(self, a: RoughClass) -> RoughClass:
        out = self.neg(self.necessity(self.neg(a)))
        assert (out.lower, out.upper) == (a.upper, a.upper)
        return out

    def implies(self, a: RoughClass, b: RoughClass) -> RoughClass:
        left = self.join(self.neg(self.necessity(a)), self.necessity(b))
        right = self.join(
            self.necessity(self.neg(a)), self.neg(self.necessity(self.neg(b)))
        )
        return self.meet(left, right)

    def leq(self, a: RoughClass, b: RoughClass) -> bool:
        return self.meet(a, b) == a

    def to_candidate(self) -> FiniteAlgebraCandidate:
        index = {c: i for i, c in enumerate(self.carrier)}
        n = len(self.carrier)
        return FiniteAlgebraCandidate(
            carrier=self.carrier,
            meet=[
                [index[self.meet(a, b)] for b in self.carrier] for a in self.carrier
            ],
            join=[
                [index[self.join(a, b)] for b in self.carrier] for a in self.carrier
            ],
            neg=[index[self.neg(a)] for a in self.carrier],
            necessity=[index[self.necessity(a)] for a in self.carrier],
            zero=index[self.zero],
            one=index[self.one],
        )


def quotient_algebra(space: ApproximationSpace) -> QuotientAlgebra:
    return QuotientAlgebra(space)


@dataclass
class FiniteAlgebraCandidate:
    """Finite structure under test, with index-based operation tables.

    join may be omitted; the checkers then derive it as ¬(¬a ⊓ ¬b).
    """

    carrier: Sequence
    meet: list[list[int]]
    neg: list[int]
    necessity: list[int]
    zero: int
    one: int
    join: list[list[int]] | None = None

    def __post_init__(self):
        n = len(self.carrier)
        tables = [self.meet] + ([self.join] if self.join is not None else [])
        for table in tables:
            assert len(table) == n and all(len(row) == n for row in table)
            assert all(0 <= v < n for row in table for v in row)
        for table in (self.neg, self.necessity):
            assert len(table) == n and all(0 <= v < n for v in table)
        assert 0 <= self.zero < n and 0 <= self.one < n

    @property
    def size(self) -> int:
        return len(self.carrier)

    def join_of(self, a: int, b: int) -> int:
        if self.join is not None:
            return self.join[a][b]
        return self.neg[self.meet[self.neg[a]][self.neg[b]]]

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a


def _scan1(cand: FiniteAlgebraCandidate, ok: Callable[[int], bool]) -> AxiomCheck:
    for a in range(cand.size):
        if not ok(a):
            return AxiomCheck(False, (cand.carrier[a],))
    return AxiomCheck(True)


def _scan2(cand: FiniteAlgebraCandidate, ok: Callable[[int, int], bool]) -> AxiomCheck:
    for a in range(cand.size):
        for b in range(cand.size):
            if not ok(a, b):
                return AxiomCheck(False, (cand.carrier[a], cand.carrier[b]))
    return AxiomCheck(True)


def _scan3(
    cand: FiniteAlgebraCandidate, ok: Callable[[int, int, int], bool]
) -> AxiomCheck:
    for a in range(cand.size):
        for b in range(cand.size):
            for c in range(cand.size):
                if not ok(a, b, c):
                    return AxiomCheck(
                        False, (cand.carrier[a], cand.carrier[b], cand.carrier[c])
                    )
    return AxiomCheck(True)


def _lattice_base(cand: FiniteAlgebraCandidate) -> dict[str, AxiomCheck]:
    mt, jn = cand.meet.__getitem__, cand.join_of
    results = {
        "meet-idempotent": _scan1(cand, lambda a: mt(a)[a] == a),
        "meet-commutative": _scan2(cand, lambda a, b: mt(a)[b] == mt(b)[a]),
        "meet-associative": _scan3(
            cand, lambda a, b, c: mt(mt(a)[b])[c] == mt(a)[mt(b)[c]]
        ),
        "join-idempotent": _scan1(cand, lambda a: jn(a, a) == a),
        "join-commutative": _scan2(cand, lambda a, b: jn(a, b) == jn(b, a)),
        "join-associative": _scan3(
            cand, lambda a, b, c: jn(jn(a, b), c) == jn(a, jn(b, c))
        ),
        "absorption": _scan2(
            cand, lambda a, b: mt(a)[jn(a, b)] == a and jn(a, mt(a)[b]) == a
        ),
        "distributivity": _scan3(
            cand,
            lambda a, b, c: mt(a)[jn(b, c)] == jn(mt(a)[b], mt(a)[c])
            and jn(a, mt(b)[c]) == mt(jn(a, b))[jn(a, c)],
        ),
        "bounds": _scan1(
            cand,
            lambda a: jn(cand.zero, a) == a
            and mt(cand.zero)[a] == cand.zero
            and mt(cand.one)[a] == a
            and jn(cand.one, a) == cand.one,
        ),
        "negation-involution": _scan1(cand, lambda a: cand.neg[cand.neg[a]] == a),
        "negation-de-morgan": _scan2(
            cand,
            lambda a, b: cand.neg[jn(a, b)] == mt(cand.neg[a])[cand.neg[b]]
            and cand.neg[mt(a)[b]] == jn(cand.neg[a], cand.neg[b]),
        ),
    }
    return results


def check_pre_rough(cand: FiniteAlgebraCandidate) -> AxiomReport:
    """Distributive De Morgan lattice plus the modal-operator identities."""
    mt, jn, ng, L = cand.meet.__getitem__, cand.join_of, cand.neg, cand.necessity
    results = _lattice_base(cand)
    results.update(
        {
            "L-contraction": _scan1(cand, lambda a: mt(L[a])[a] == L[a]),
            "L-join-distribution": _scan2(
                cand, lambda a, b: L[jn(a, b)] == jn(L[a], L[b])
            ),
            "L-possibility-stable": _scan1(
                cand, lambda a: ng[L[ng[L[a]]]] == L[a]
            ),
            "L-idempotence": _scan1(cand, lambda a: L[L[a]] == L[a]),
            "L-top": AxiomCheck(L[cand.one] == cand.one)
            if L[cand.one] == cand.one
            else AxiomCheck(False, (cand.carrier[cand.one],)),
            "L-meet-distribution": _scan2(
                cand, lambda a, b: L[mt(a)[b]] == mt(L[a])[L[b]]
            ),
            "L-excluded-middle": _scan1(
                cand, lambda a: jn(ng[L[a]], L[a]) == cand.one
            ),
            "quasi-equation": _scan2(
                cand,
                lambda a, b: not (
                    mt(L[a])[L[b]] == L[a]
                    and ng[L[ng[mt(a)[b]]]] == ng[L[ng[a]]]
                )
                or mt(a)[b] == a,
            ),
        }
    )
    # On a finite carrier the lattice is complete, so complete
    # distributivity reduces to the plain distributive law.
    results["completely-distributive-finite"] = results["distributivity"]
    return AxiomReport(results)


def check_essential_pre_rough(cand: FiniteAlgebraCandidate) -> AxiomReport:
    """Quasi-Boolean base plus the six defining conditions."""
    mt, ng, L = cand.meet.__getitem__, cand.neg, cand.necessity
    dia = lambda a: ng[L[ng[a]]]
    results = _lattice_base(cand)
    results.update(
        {
            "E1-top": AxiomCheck(True)
            if L[cand.one] == cand.one
            else AxiomCheck(False, (cand.carrier[cand.one],)),
            "E2-contraction": _scan1(cand, lambda a: mt(L[a])[a] == L[a]),
            "E3-meet-distribution": _scan2(
                cand, lambda a, b: L[mt(a)[b]] == mt(L[a])[L[b]]
            ),
            "E4-possibility-stable": _scan1(cand, lambda a: ng[L[ng[L[a]]]] == L[a]),
            "E5-no-contradiction": _scan1(
                cand, lambda a: mt(ng[L[a]])[L[a]] == cand.zero
            ),
            "E6-order-determination": _scan2(
                cand,
                lambda a, b: not (
                    cand.leq(dia(a), dia(b)) and cand.leq(L[a], L[b])
                )
                or cand.leq(a, b),
            ),
        }
    )
    return AxiomReport(results)
