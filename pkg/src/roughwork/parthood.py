"""Parthood catalog over subsets, mixed elements, and dialectical pairs.

Each kind is tied to the carrier its defining condition speaks about:
the bound-based and granule-based kinds compare plain subsets, the
algebraic kinds compare mixed elements, and the natural kind compares
dialectical pairs.  Order-theoretic structure is decided by exhaustive
scan and reported with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from roughwork.approx import ApproximationSpace, RoughClass, Subset
from roughwork.cera import CeraModel, MixedElement
from roughwork.crad import CradModel, DialecticalPair
from roughwork.granular import AxiomCheck, GranularModel

MATRIX_CAP = 1024


class CarrierCapExceededError(RuntimeError):
    """The parthood carrier is too large to materialize as a matrix."""


class ParthoodKind(Enum):
    VERY_CAUTIOUS = "very-cautious"
    CAUTIOUS = "cautious"
    LATERAL = "lateral"
    POSSIBILIST = "possibilist"
    ULTRA_CAUTIOUS = "ultra-cautious"
    LATERAL_PLUS = "lateral-plus"
    BILATERAL = "bilateral"
    LATERAL_PLUS_PLUS = "lateral-plus-plus"
    G_SIMPLE = "g-simple"
    ROUGHLY_CONSISTENT = "roughly-consistent"
    ADDITIVE = "additive"
    COMMON = "common"
    NATURAL_CRAD = "natural-crad"

    @classmethod
    def from_name(cls, name: str) -> ParthoodKind:
        for kind in cls:
            if kind.value == name:
                return kind
        known = ", ".join(k.value for k in cls)
        raise ValueError(f"unknown parthood kind {name!r}; expected one of {known}")


SUBSET_KINDS = frozenset(
    {
        ParthoodKind.VERY_CAUTIOUS,
        ParthoodKind.CAUTIOUS,
        ParthoodKind.LATERAL,
        ParthoodKind.POSSIBILIST,
        ParthoodKind.ULTRA_CAUTIOUS,
        ParthoodKind.LATERAL_PLUS,
        ParthoodKind.BILATERAL,
        ParthoodKind.LATERAL_PLUS_PLUS,
        ParthoodKind.G_SIMPLE,
    }
)
MIXED_KINDS = frozenset(
    {ParthoodKind.ROUGHLY_CONSISTENT, ParthoodKind.ADDITIVE, ParthoodKind.COMMON}
)


@dataclass(frozen=True)
class RelationReport:
    reflexive: AxiomCheck
    transitive: AxiomCheck
    antisymmetric: AxiomCheck

    def flags(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive.passed,
            "transitive": self.transitive.passed,
            "antisymmetric": self.antisymmetric.passed,
        }


def _bounds_oracle(model):
    if isinstance(model, GranularModel):
        return model.lower_op, model.upper_op
    if isinstance(model, ApproximationSpace):
        return model.lower, model.upper
    raise TypeError(
        f"subset parthoods need an approximation space or granular model, got {model!r}"
    )


def _class_of(model: CeraModel, el: MixedElement) -> RoughClass:
    if el.is_type2:
        return el.payload
    return model.space.rough_class_of(el.payload)


def holds(kind: ParthoodKind, model, a, b) -> bool:
    """Evaluate the defining condition of one parthood kind."""
    if kind in SUBSET_KINDS:
        if not (isinstance(a, Subset) and isinstance(b, Subset)):
            raise TypeError(f"{kind.value} parthood compares plain subsets")
        if kind is ParthoodKind.G_SIMPLE:
            if not isinstance(model, GranularModel):
                raise TypeError("g-simple parthood needs a granular model")
            return all(
                g.is_subset_of(b)
                for g in model.granules
                if g.is_subset_of(a)
            )
        lower, upper = _bounds_oracle(model)
        la, ua = lower(a), upper(a)
        lb, ub = lower(b), upper(b)
        if kind is ParthoodKind.VERY_CAUTIOUS:
            return la.is_subset_of(lb)
        if kind is ParthoodKind.CAUTIOUS:
            return la.is_subset_of(ub)
        if kind is ParthoodKind.LATERAL:
            return la.is_subset_of(ub - lb)
        if kind is ParthoodKind.POSSIBILIST:
            return ua.is_subset_of(ub)
        if kind is ParthoodKind.ULTRA_CAUTIOUS:
            return ua.is_subset_of(lb)
        if kind is ParthoodKind.LATERAL_PLUS:
            return ua.is_subset_of(ub - lb)
        if kind is ParthoodKind.BILATERAL:
            return (ua - la).is_subset_of(ub - lb)
        return (ua - la).is_subset_of(lb)
    if kind in MIXED_KINDS:
        if not isinstance(model, CeraModel):
            raise TypeError(f"{kind.value} parthood needs the mixed algebra")
        if not (isinstance(a, MixedElement) and isinstance(b, MixedElement)):
            raise TypeError(f"{kind.value} parthood compares mixed elements")
        if kind is ParthoodKind.ROUGHLY_CONSISTENT:
            return model.quotient.leq(_class_of(model, a), _class_of(model, b))
        if kind is ParthoodKind.ADDITIVE:
            return model.oplus(a, b) == b
        return model.commonality(a, b) == a
    if not isinstance(model, CradModel):
        raise TypeError("natural parthood needs the dialectical pair model")
    if not (isinstance(a, DialecticalPair) and isinstance(b, DialecticalPair)):
        raise TypeError("natural parthood compares dialectical pairs")
    return model.natural_parthood(a, b)


def carrier_elements(kind: ParthoodKind, model) -> list:
    """The carrier the kind quantifies over, in deterministic order."""
    if kind in SUBSET_KINDS:
        if kind is ParthoodKind.G_SIMPLE and not isinstance(model, GranularModel):
            raise TypeError("g-simple parthood needs a granular model")
        if isinstance(model, (GranularModel, ApproximationSpace)):
            return list(model.universe.subsets())
        raise TypeError(f"no subset carrier on {model!r}")
    if kind in MIXED_KINDS:
        if not isinstance(model, CeraModel):
            raise TypeError(f"{kind.value} parthood needs the mixed algebra")
        return model.elements()
    if not isinstance(model, CradModel):
        raise TypeError("natural parthood needs the dialectical pair model")
    return list(model.carrier)


def relation_matrix(
    kind: ParthoodKind, model, cap: int = MATRIX_CAP
) -> tuple[list, list[list[bool]]]:
    elements = carrier_elements(kind, model)
    if len(elements) > cap:
        raise CarrierCapExceededError(
            f"carrier of size {len(elements)} exceeds the matrix cap {cap}"
        )
    rows = [[holds(kind, model, a, b) for b in elements] for a in elements]
    return elements, rows


def analyze(kind: ParthoodKind, model, cap: int = MATRIX_CAP) -> RelationReport:
    """Decide reflexivity, transitivity, and antisymmetry exhaustively."""
    elements, rows = relation_matrix(kind, model, cap)
    m = np.array(rows, dtype=bool)

    refl_bad = np.flatnonzero(~np.diagonal(m))
    reflexive = AxiomCheck(
        refl_bad.size == 0,
        None if refl_bad.size == 0 else (elements[refl_bad[0]],),
    )

    reach = (m.astype(np.uint8) @ m.astype(np.uint8)) > 0
    trans_bad = np.argwhere(reach & ~m)
    if trans_bad.size == 0:
        transitive = AxiomCheck(True)
    else:
        i, k = (int(v) for v in trans_bad[0])
        j = int(np.flatnonzero(m[i] & m[:, k])[0])
        transitive = AxiomCheck(False, (elements[i], elements[j], elements[k]))

    sym = m & m.T
    np.fill_diagonal(sym, False)
    anti_bad = np.argwhere(sym)
    antisymmetric = AxiomCheck(
        anti_bad.size == 0,
        None
        if anti_bad.size == 0
        else tuple(elements[int(v)] for v in anti_bad[0]),
    )
    return RelationReport(reflexive, transitive, antisymmetric)
