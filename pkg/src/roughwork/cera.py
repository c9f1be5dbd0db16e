"""Mixed-domain enriched algebra over subsets and their rough classes.

The carrier joins every plain subset of the universe (type 1) with every
rough class of the space, the class of the empty set included (type 2).
Operations dispatch on the tags; a mixed application collapses the class
argument through its members and lands back in a class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from roughwork.approx import ApproximationSpace, RoughClass, Subset
from roughwork.granular import AxiomCheck, AxiomReport
from roughwork.prerough import QuotientAlgebra

# Identity checking materializes full binary operation tables.
IDENTITY_CARRIER_CAP = 4096


class UndefinedOperationError(RuntimeError):
    """A partial operation was applied outside its domain."""


@dataclass(frozen=True)
class MixedElement:
    """Tagged carrier element: a plain subset or a rough class."""

    payload: Subset | RoughClass

    def __post_init__(self):
        if not isinstance(self.payload, (Subset, RoughClass)):
            raise TypeError(f"unsupported payload {self.payload!r}")

    @classmethod
    def type1(cls, subset: Subset) -> MixedElement:
        assert isinstance(subset, Subset)
        return cls(subset)

    @classmethod
    def type2(cls, rough: RoughClass) -> MixedElement:
        assert isinstance(rough, RoughClass)
        return cls(rough)

    @property
    def is_type1(self) -> bool:
        return isinstance(self.payload, Subset)

    @property
    def is_type2(self) -> bool:
        return isinstance(self.payload, RoughClass)

    def describe(self) -> str:
        """Printable form; classes show a sample member and their bounds."""
        if self.is_type1:
            return str(self.payload)
        cls_ = self.payload
        return f"{cls_} bounds=({cls_.lower},{cls_.upper})"

    def __str__(self) -> str:
        return str(self.payload)


class CeraModel:
    """Operations and constants of the mixed algebra of one space.

    With ``soft`` set, the commonality slot of the algebra holds the
    relaxed operation (mixed cases meet against the union of members
    instead of their intersection).
    """

    def __init__(self, space: ApproximationSpace, soft: bool = False):
        self.space = space
        self.soft = soft
        self.quotient = QuotientAlgebra(space)
        self.bottom = MixedElement.type1(space.universe.empty)
        self.top = MixedElement.type1(space.universe.full)
        self.zero = MixedElement.type2(self.quotient.zero)
        self.one = MixedElement.type2(self.quotient.one)

    def class_of(self, x: Subset) -> MixedElement:
        return MixedElement.type2(self.space.rough_class_of(x))

    def elements(self) -> list[MixedElement]:
        """Full carrier: subsets in mask order, then classes."""
        out = [MixedElement.type1(s) for s in self.space.universe.subsets()]
        out.extend(MixedElement.type2(c) for c in self.quotient.carrier)
        return out

    # Mixed cases below use two collapses: the union of the members of a
    # class is its upper bound, their intersection is its lower bound.

    def frak_l(self, x: MixedElement) -> MixedElement:
        if x.is_type1:
            return MixedElement.type1(self.space.lower(x.payload))
        return MixedElement.type2(self.quotient.necessity(x.payload))

    def black_lozenge(self, x: MixedElement) -> MixedElement:
        if x.is_type1:
            return MixedElement.type1(self.space.upper(x.payload))
        return MixedElement.type2(self.quotient.possibility(x.payload))

    def oplus(self, x: MixedElement, y: MixedElement) -> MixedElement:
        """Aggregation; mixed cases aggregate across every member."""
        if x.is_type1 and y.is_type1:
            return MixedElement.type1(x.payload | y.payload)
        if x.is_type1:
            return self.class_of(x.payload | y.payload.upper)
        if y.is_type1:
            return self.class_of(x.payload.upper | y.payload)
        return MixedElement.type2(self.quotient.join(x.payload, y.payload))

    def odot(self, x: MixedElement, y: MixedElement) -> MixedElement:
        """Commonality; mixed cases keep what is common to every member."""
        if x.is_type1 and y.is_type1:
            return MixedElement.type1(x.payload & y.payload)
        if x.is_type1:
            return self.class_of(x.payload & y.payload.lower)
        if y.is_type1:
            return self.class_of(x.payload.lower & y.payload)
        return MixedElement.type2(self.quotient.meet(x.payload, y.payload))

    def circ(self, x: MixedElement, y: MixedElement) -> MixedElement:
        """Relaxed commonality; mixed cases meet the union of members."""
        if x.is_type1 and y.is_type1:
            return MixedElement.type1(x.payload & y.payload)
        if x.is_type1:
            return self.class_of(x.payload & y.payload.upper)
        if y.is_type1:
            return self.class_of(x.payload.upper & y.payload)
        return MixedElement.type2(self.quotient.meet(x.payload, y.payload))

    def commonality(self, x: MixedElement, y: MixedElement) -> MixedElement:
        """The commonality slot of this model (relaxed when soft)."""
        if self.soft:
            return self.circ(x, y)
        return self.odot(x, y)

    def sim_neg(self, x: MixedElement) -> MixedElement:
        if x.is_type1:
            return MixedElement.type1(x.payload.complement())
        return MixedElement.type2(self.quotient.neg(x.payload))

    def partial_neg(self, x: MixedElement) -> MixedElement:
        """Class negation; undefined on plain subsets."""
        if x.is_type1:
            raise UndefinedOperationError(
                f"negation undefined on type-1 element {x}"
            )
        return MixedElement.type2(self.quotient.neg(x.payload))

    def rightsquig(self, x: MixedElement, y: MixedElement) -> MixedElement:
        if x.is_type1 and y.is_type1:
            return MixedElement.type1(x.payload | y.payload.complement())
        if x.is_type1:
            # union over members z of (x + z complement) = x + lower complement
            return self.class_of(x.payload | y.payload.lower.complement())
        if y.is_type1:
            return self.class_of(x.payload.upper | y.payload.complement())
        return MixedElement.type2(self.quotient.implies(x.payload, y.payload))

    def two_head(self, x: MixedElement, y: MixedElement) -> MixedElement:
        """As the squiggly arrow, but the all-subset case lands in a class."""
        if x.is_type1 and y.is_type1:
            return self.class_of(x.payload | y.payload.complement())
        return self.rightsquig(x, y)


def _first_witness(bad: np.ndarray, axes: tuple, clause: str) -> tuple | None:
    """Map the first True cell of a violation array back onto elements."""
    hits = np.argwhere(bad)
    if hits.size == 0:
        return None
    first = hits[0]
    return (clause,) + tuple(axis[i] for axis, i in zip(axes, first))


def check_cera_identities(model: CeraModel) -> AxiomReport:
    """Exhaustively verify the identity suite of the mixed algebra.

    Binary tables are materialized once; ternary laws are evaluated by
    indexing tables with tables, so the scan stays vectorized.  Guarded
    laws quantify only over the tags named in their premises.
    """
    els = model.elements()
    n = len(els)
    if n > IDENTITY_CARRIER_CAP:
        raise ValueError(f"carrier of size {n} exceeds identity-check cap")
    index = {el: i for i, el in enumerate(els)}

    type1 = np.array([el.is_type1 for el in els])
    t1 = np.flatnonzero(type1)
    t2 = np.flatnonzero(~type1)
    arange = np.arange(n)

    plus = np.empty((n, n), dtype=np.int32)
    times = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            plus[i, j] = index[model.oplus(a, b)]
            times[i, j] = index[model.commonality(a, b)]
    low = np.array([index[model.frak_l(a)] for a in els])
    dia = np.array([index[model.black_lozenge(a)] for a in els])
    neg = np.array([index[model.sim_neg(a)] for a in els])
    bot_i, top_i = index[model.bottom], index[model.top]
    zero_i, one_i = index[model.zero], index[model.one]

    els_arr = np.empty(n, dtype=object)
    els_arr[:] = els
    all1 = els_arr[t1]
    all2 = els_arr[t2]
    results: dict[str, AxiomCheck] = {}

    def record(name: str, clauses) -> None:
        """clauses: iterable of (label, violation array, element axes)."""
        for clause, bad, axes in clauses:
            witness = _first_witness(bad, axes, clause)
            if witness is not None:
                results[name] = AxiomCheck(False, witness)
                return
        results[name] = AxiomCheck(True)

    one_el = (els_arr,)
    two_el = (els_arr, els_arr)

    # Tag detectors.
    squig_diag = np.array([model.rightsquig(a, a) == model.top for a in els])
    record("type-1", [("x ~> x = T iff type-1", squig_diag != type1, one_el)])

    def neg_defined(a: MixedElement) -> bool:
        try:
            model.partial_neg(a)
        except UndefinedOperationError:
            return False
        return True

    defined = np.array([neg_defined(a) for a in els])
    record("type-2", [("neg defined iff type-2", defined == type1, one_el)])

    # Unary laws over the whole carrier.
    record(
        "ov-1",
        [
            ("~~x = x", neg[neg] != arange, one_el),
            ("LLx = Lx", low[low] != low, one_el),
            ("DLx = Lx", dia[low] != low, one_el),
        ],
    )
    record(
        "ov-2",
        [
            ("Lx (+) x = x", plus[low, arange] != arange, one_el),
            ("Lx (.) x = Lx", times[low, arange] != low, one_el),
            ("Dx (+) x = Dx", plus[dia, arange] != dia, one_el),
            ("Dx (.) x = x", times[dia, arange] != arange, one_el),
        ],
    )
    record(
        "ov-3",
        [
            ("LDx = Dx", low[dia] != dia, one_el),
            ("x (+) x = x", plus[arange, arange] != arange, one_el),
            ("x (.) x = x", times[arange, arange] != arange, one_el),
        ],
    )
    record(
        "qov-1",
        [
            ("~x (+) x = T", plus[neg[t1], t1] != top_i, (all1,)),
            ("~Lx (+) Lx = 1", plus[neg[low[t2]], low[t2]] != one_i, (all2,)),
        ],
    )
    record(
        "qov-2",
        [
            ("~bottom = top", np.array([neg[bot_i] != top_i]), (els_arr[[bot_i]],)),
            ("~0 = 1", np.array([neg[zero_i] != one_i]), (els_arr[[zero_i]],)),
        ],
    )

    # Weak associativity and commutativity over the whole carrier.
    rows = arange[:, None]
    pp = plus[rows, plus]
    tt = times[rows, times]
    record(
        "u1",
        [
            ("triple (+) collapse", plus[rows, pp] != pp, two_el),
            ("triple (.) collapse", times[rows, tt] != tt, two_el),
        ],
    )
    record(
        "u2",
        [
            ("(+) commutes", plus != plus.T, two_el),
            ("(.) commutes", times != times.T, two_el),
        ],
    )

    # Same-type ternary laws.
    def assoc(table: np.ndarray, idxs: np.ndarray) -> np.ndarray:
        sub = table[np.ix_(idxs, idxs)]
        left = table[idxs][:, sub]
        right = table[sub][:, :, idxs]
        return left != right

    def distrib(idxs: np.ndarray) -> np.ndarray:
        psub = plus[np.ix_(idxs, idxs)]
        tsub = times[np.ix_(idxs, idxs)]
        left = plus[idxs][:, tsub]
        right = times[psub[:, :, None], psub[:, None, :]]
        return left != right

    for tag, idxs, axis in (("1", t1, all1), ("2", t2, all2)):
        three = (axis, axis, axis)
        two = (axis, axis)
        sub_t = times[np.ix_(idxs, idxs)]
        record(f"ter-{tag}1", [("(+) associative", assoc(plus, idxs), three)])
        record(f"ter-{tag}2", [("(+) over (.)", distrib(idxs), three)])
        record(f"ter-{tag}3", [("(.) associative", assoc(times, idxs), three)])
        record(
            f"bi-{tag}",
            [
                ("absorption", plus[idxs[:, None], sub_t] != idxs[:, None], two),
                ("de morgan", neg[sub_t] != plus[np.ix_(neg[idxs], neg[idxs])], two),
            ],
        )

    # Mixed quasi-identities.
    premise = plus[np.ix_(t1, t2)] == t2[None, :]
    conclusion = plus[np.ix_(dia[t1], t2)] == t2[None, :]
    record("bm", [("x (+) y = y forces Dx (+) y = y", premise & ~conclusion, (all1, all2))])

    bad_hra = type1[times[one_i, t1]] | type1[plus[t1, zero_i]]
    record("hra1", [("conversion lands in type-2", bad_hra, (all1,))])

    return AxiomReport(results)
