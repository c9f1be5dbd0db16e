"""Dialectical pair carrier built over the mixed algebra.

K holds every subset twinned with its rough class, in both component
orders.  The binary operations are partial: a componentwise value only
counts when the pair lands back in K, and mixed-orientation cases are
gated by an explicit side condition that is checked first.
"""

from __future__ import annotations

from dataclasses import dataclass

from roughwork.approx import RoughClass, Subset
from roughwork.cera import CeraModel, MixedElement, UndefinedOperationError


class UndefinedResultError(UndefinedOperationError):
    """A partial pair operation has no value; carries the failed condition."""

    def __init__(self, condition: str):
        super().__init__(f"undefined result: {condition}")
        self.condition = condition


@dataclass(frozen=True)
class DialecticalPair:
    """Ordered pair of mixed elements; valid ones live in a model's K."""

    first: MixedElement
    second: MixedElement

    def describe(self) -> str:
        return f"({self.first.describe()}, {self.second.describe()})"

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


class CradModel:
    """K with its partial operations, parthood, and constants."""

    def __init__(self, cera: CeraModel):
        self.cera = cera
        subsets = list(cera.space.universe.subsets())
        self.carrier = tuple(
            [self.first_pair(x) for x in subsets]
            + [self.second_pair(x) for x in subsets]
        )
        self._members = frozenset(self.carrier)
        # orientations never collide: the tags of the components differ
        assert len(self._members) == len(self.carrier)
        self.top_pair = DialecticalPair(cera.top, cera.one)
        self.one_pair = DialecticalPair(cera.one, cera.top)
        self.zero_pair = DialecticalPair(cera.zero, cera.bottom)
        self.bottom_pair = DialecticalPair(cera.bottom, cera.zero)
        constants = {self.top_pair, self.one_pair, self.zero_pair, self.bottom_pair}
        assert constants <= self._members

    def first_pair(self, x: Subset) -> DialecticalPair:
        """The subset-first element (x, 0 (+) x) of K."""
        el = MixedElement.type1(x)
        return DialecticalPair(el, self.cera.oplus(self.cera.zero, el))

    def second_pair(self, x: Subset) -> DialecticalPair:
        """The class-first element (x (+) 0, x) of K."""
        el = MixedElement.type1(x)
        return DialecticalPair(self.cera.oplus(el, self.cera.zero), el)

    def contains(self, p: DialecticalPair) -> bool:
        return p in self._members

    def _require(self, *pairs: DialecticalPair) -> None:
        for p in pairs:
            if p not in self._members:
                raise ValueError(f"{p} is not in the carrier")

    def _combine(self, p, q, op, symbol: str, noun: str) -> DialecticalPair:
        a, b = p.first, p.second
        c, e = q.first, q.second
        if a.is_type1 == c.is_type1:
            result = DialecticalPair(op(a, c), op(b, e))
            if result not in self._members:
                raise UndefinedResultError(
                    f"componentwise {noun} lies outside the carrier"
                )
            return result
        if a.is_type1:
            gate = op(op(e, a), self.cera.zero)
            target = op(a, c)
            if gate != target:
                raise UndefinedResultError(
                    f"(e {symbol} a) {symbol} 0 = a {symbol} c fails"
                )
            result = DialecticalPair(target, op(e, a))
        else:
            gate = op(op(c, b), self.cera.zero)
            target = op(a, e)
            if gate != target:
                raise UndefinedResultError(
                    f"(c {symbol} b) {symbol} 0 = a {symbol} e fails"
                )
            result = DialecticalPair(target, op(c, b))
        if result not in self._members:
            # the aggregation gate already forces membership; the
            # commonality gate does not, so keep the carrier discipline
            raise UndefinedResultError(
                f"componentwise {noun} lies outside the carrier"
            )
        return result

    def plus(self, p: DialecticalPair, q: DialecticalPair) -> DialecticalPair:
        self._require(p, q)
        return self._combine(p, q, self.cera.oplus, "(+)", "sum")

    def times(self, p: DialecticalPair, q: DialecticalPair) -> DialecticalPair:
        self._require(p, q)
        return self._combine(p, q, self.cera.commonality, "(.)", "product")

    def l_star(self, p: DialecticalPair) -> DialecticalPair:
        self._require(p)
        result = DialecticalPair(
            self.cera.frak_l(p.first), self.cera.frak_l(p.second)
        )
        if result not in self._members:
            raise UndefinedResultError(
                "componentwise interior lies outside the carrier"
            )
        return result

    def sim_star(self, p: DialecticalPair) -> DialecticalPair:
        self._require(p)
        result = DialecticalPair(
            self.cera.sim_neg(p.first), self.cera.sim_neg(p.second)
        )
        if result not in self._members:
            raise UndefinedResultError(
                "componentwise negation lies outside the carrier"
            )
        return result

    def _component_class(self, el: MixedElement) -> RoughClass:
        if el.is_type2:
            return el.payload
        return self.cera.space.rough_class_of(el.payload)

    def natural_parthood(self, p: DialecticalPair, q: DialecticalPair) -> bool:
        """Componentwise comparison of the classes of the components."""
        self._require(p, q)
        leq = self.cera.quotient.leq
        return leq(
            self._component_class(p.first), self._component_class(q.first)
        ) and leq(
            self._component_class(p.second), self._component_class(q.second)
        )
