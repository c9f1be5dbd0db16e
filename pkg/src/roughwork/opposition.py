"""Figures of opposition over finite case spaces.

Classification runs off the two simultaneity questions (can the pair be
true together, false together), with Belnap-style (t, f) world
valuations underneath so that gluts are representable. The reference
catalog is shipped as immutable data, and the truth-grade machine walks
the eight-node figure of weak and strong truths.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from roughwork.approx import ApproximationSpace, Subset


class NonClassicalValuationError(ValueError):
    """A sentence carries a glut or gap where two-valuedness is required."""


class MissingAnnotationError(KeyError):
    """A dialectical pattern was requested without its annotation."""


class DegeneratePartitionWarning(UserWarning):
    """One of the three hexagon regions is empty."""


class Figure(Enum):
    CONTRADICTION = "Contradiction"
    CONTRARIETY = "Contrariety"
    SUB_CONTRARIETY = "SubContrariety"
    SUB_ALTERNATION = "SubAlternation"


def classify_from_questions(tt_possible: bool, ff_possible: bool) -> Figure:
    """Read the figure off the two answers; a total bijection."""
    if tt_possible:
        return Figure.SUB_ALTERNATION if ff_possible else Figure.SUB_CONTRARIETY
    return Figure.CONTRARIETY if ff_possible else Figure.CONTRADICTION


@dataclass(frozen=True)
class CaseSpace:
    """Worlds with a (t, f) valuation for every sentence at every world."""

    worlds: tuple
    valuation: Mapping

    def __post_init__(self):
        if not self.worlds:
            raise ValueError("a case space needs at least one world")
        for sentence, per_world in self.valuation.items():
            for w in self.worlds:
                if w not in per_world:
                    raise ValueError(f"sentence {sentence!r} unvalued at {w!r}")
                t, f = per_world[w]
                if not isinstance(t, (bool, int)) or not isinstance(f, (bool, int)):
                    raise ValueError("valuations must be (t, f) bit pairs")

    @classmethod
    def from_sets(cls, worlds: Sequence, extents: Mapping) -> CaseSpace:
        """Classical valuation: t iff the world lies in the sentence's extent."""
        worlds = tuple(worlds)
        valuation = {
            name: {w: (w in extent, w not in extent) for w in worlds}
            for name, extent in extents.items()
        }
        return cls(worlds, valuation)

    @property
    def sentences(self) -> tuple:
        return tuple(self.valuation)

    def pair(self, sentence, world) -> tuple[bool, bool]:
        try:
            t, f = self.valuation[sentence][world]
        except KeyError as exc:
            raise KeyError(f"no valuation for {sentence!r} at {world!r}") from exc
        return bool(t), bool(f)

    def is_classical(self, sentence) -> bool:
        return all(
            self.pair(sentence, w) in ((True, False), (False, True))
            for w in self.worlds
        )


@dataclass(frozen=True)
class PairClassification:
    figure: Figure
    tt_possible: bool
    ff_possible: bool
    row_profile: Mapping[str, str]


def classify_pair(
    cs: CaseSpace, a, b, classical: bool = True
) -> PairClassification:
    """Answer the simultaneity questions for a sentence pair.

    The row profile marks each of TT/TF/FT/FF as realized ("T") or not
    ("NP") so it can be laid beside the four classical row patterns.
    """
    if classical:
        for s in (a, b):
            if not cs.is_classical(s):
                raise NonClassicalValuationError(
                    f"sentence {s!r} is not two-valued in this case space"
                )
    seen = {key: False for key in ("TT", "TF", "FT", "FF")}
    for w in cs.worlds:
        ta = cs.pair(a, w)[0]
        tb = cs.pair(b, w)[0]
        key = ("T" if ta else "F") + ("T" if tb else "F")
        seen[key] = True
    profile = {k: ("T" if v else "NP") for k, v in seen.items()}
    return PairClassification(
        figure=classify_from_questions(seen["TT"], seen["FF"]),
        tt_possible=seen["TT"],
        ff_possible=seen["FF"],
        row_profile=profile,
    )


HEXAGON_NODE_ORDER = ("L", "B", "E", "U", "Lc", "LE")


@dataclass(frozen=True)
class HexagonReport:
    nodes: Mapping[str, Subset]
    figures: Mapping[tuple[str, str], Figure]
    degenerate: tuple[str, ...]

    def figure_of(self, a: str, b: str) -> Figure:
        return self.figures[(a, b)] if (a, b) in self.figures else self.figures[(b, a)]


def hexagon(space: ApproximationSpace, x: Subset) -> HexagonReport:
    """Classify the six membership sentences induced by an approximation.

    Nodes: lower L, boundary B, exterior E, upper U, the complement of
    L, and L with E adjoined. Worlds are the universe elements. Empty
    L, B, or E regions are flagged as a degenerate partition.
    """
    lower = space.lower(x)
    upper = space.upper(x)
    regions = {
        "L": lower,
        "B": space.boundary(x),
        "E": upper.complement(),
        "U": upper,
        "Lc": lower.complement(),
        "LE": lower | upper.complement(),
    }
    degenerate = tuple(name for name in ("L", "B", "E") if regions[name].is_empty)
    if degenerate:
        warnings.warn(
            f"empty region(s): {', '.join(degenerate)}",
            DegeneratePartitionWarning,
            stacklevel=2,
        )
    worlds = space.universe.atoms
    cs = CaseSpace.from_sets(
        worlds, {name: set(sub.atom_names()) for name, sub in regions.items()}
    )
    figures = {
        (p, q): classify_pair(cs, p, q).figure
        for p, q in combinations(HEXAGON_NODE_ORDER, 2)
    }
    return HexagonReport(nodes=regions, figures=figures, degenerate=degenerate)


@dataclass(frozen=True)
class ReferenceTable:
    """One transcribed catalog entry; rows are (left, right, entry)."""

    name: str
    kind: str
    left: str
    right: str
    rows: tuple[tuple[str, str, str], ...]
    label: str


def _resolution(left, right, entries, label) -> ReferenceTable:
    patterns = (("T", "T"), ("T", "F"), ("F", "T"), ("F", "F"))
    rows = tuple((a, b, e) for (a, b), e in zip(patterns, entries))
    return ReferenceTable(
        name=f"{left}/{right} resolution",
        kind="resolution",
        left=left,
        right=right,
        rows=rows,
        label=label,
    )


def _simultaneity(left, right, entries, label) -> ReferenceTable:
    patterns = (("T", "T"), ("F", "F"))
    rows = tuple((a, b, e) for (a, b), e in zip(patterns, entries))
    return ReferenceTable(
        name=f"{left}/{right} simultaneity",
        kind="simultaneity",
        left=left,
        right=right,
        rows=rows,
        label=label,
    )


_REFERENCE_TABLES = (
    _resolution("AP", "APN", ("IN", "T", "T", "IN"), "Contradiction?"),
    _resolution("AP", "AP0", ("IN", "T", "T", "IN"), "Contradiction?"),
    _resolution("CP", "CPN", ("NP", "T", "T", "NP"), "Contradiction"),
    _resolution("CP", "CP0", ("NP", "T", "T", "T"), "Contrariety"),
    _resolution("CPN", "CP0", ("NP", "T", "T", "NP"), "Contradiction"),
    _resolution("CI", "CP", ("T", "NP", "T", "T"), "Sub-alternation"),
    _simultaneity("AP", "APN", ("NP", "NP"), "Contradiction"),
    _simultaneity("AP", "AP0", ("T", "NP"), "Sub-Contrariety"),
    _simultaneity("CP", "CPN", ("NP", "NP"), "Contradiction"),
    _simultaneity("CP", "CP0", ("NP", "NP"), "Contradiction"),
    _simultaneity("CPN", "CP0", ("NP", "NP"), "Contradiction"),
    _simultaneity("CI", "CP", ("T", "T"), "Sub-alternation"),
)


def reference_tables() -> tuple[ReferenceTable, ...]:
    return _REFERENCE_TABLES


@dataclass(frozen=True)
class JointConsistencyResult:
    satisfiable: bool
    model: Mapping[str, bool] | None
    assignments_checked: int


def joint_consistency(tables: Iterable[ReferenceTable]) -> JointConsistencyResult:
    """Search for one truth assignment respecting every NP constraint.

    A row marked NP forbids the corresponding value combination; T and
    IN rows permit it. The search is exhaustive over the predicate
    family, so an unsatisfiable answer is a proof of emptiness.
    """
    tables = tuple(tables)
    names: list[str] = []
    for table in tables:
        for predicate in (table.left, table.right):
            if predicate not in names:
                names.append(predicate)
    checked = 0
    for values in product((True, False), repeat=len(names)):
        assignment = dict(zip(names, values))
        checked += 1
        ok = True
        for table in tables:
            lv = assignment[table.left]
            rv = assignment[table.right]
            for left, right, entry in table.rows:
                if entry == "NP" and (left == "T") == lv and (right == "T") == rv:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return JointConsistencyResult(True, assignment, checked)
    return JointConsistencyResult(False, None, checked)


COMBINATION_PATTERNS = (
    ("T", "T"),
    ("F", "F"),
    ("bet", "bet"),
    ("delta", "delta"),
    ("delta", "bet"),
    ("beta", "beta"),
    ("beta", "bet"),
    ("beta", "T"),
    ("beta", "F"),
    ("delta", "T"),
    ("delta", "F"),
    ("delta", "beta"),
)


def combination_profile(
    cs: CaseSpace,
    a,
    b,
    beta: Mapping | None = None,
    bet: Mapping | None = None,
) -> frozenset[str]:
    """Which of the twelve column patterns are realized in some world.

    A label T demands the t bit, F the f bit, delta both; beta and bet
    additionally demand the annotated statement to be at-least-true in
    that world. Patterns whose annotation was not supplied are left out
    of the scan entirely; a supplied annotation missing the relevant
    sentence or pair raises.
    """

    def annotated_beta(s) -> bool:
        if s not in beta:
            raise MissingAnnotationError(f"beta annotation missing for {s!r}")
        return bool(beta[s])

    def annotated_bet() -> bool:
        for key in ((a, b), (b, a)):
            if key in bet:
                return bool(bet[key])
        raise MissingAnnotationError(f"bet annotation missing for {(a, b)!r}")

    def holds(label: str, s, w) -> bool:
        t, f = cs.pair(s, w)
        if label == "T":
            return t
        if label == "F":
            return f
        if label == "delta":
            return t and f
        if label == "beta":
            return annotated_beta(s) and t
        return annotated_bet() and t

    realized = set()
    for la, lb in COMBINATION_PATTERNS:
        if beta is None and "beta" in (la, lb):
            continue
        if bet is None and "bet" in (la, lb):
            continue
        if any(holds(la, a, w) and holds(lb, b, w) for w in cs.worlds):
            realized.add(f"{la}/{lb}")
    return frozenset(realized)


class TruthGrade(Enum):
    T_STAR = "T*"
    T_LOW_STAR = "T_*"
    TRUE = "T"
    T_MINUS = "T^-"
    T_LOW_MINUS = "T_-"
    F_MINUS = "F^-"
    F_LOW_MINUS = "F_-"
    FALSE = "F"

    @classmethod
    def from_name(cls, text: str) -> TruthGrade:
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown truth grade {text!r}")


# directed edges point from stronger truth toward falsity
TSR_EDGES = (
    (TruthGrade.T_STAR, TruthGrade.T_LOW_STAR),
    (TruthGrade.T_LOW_STAR, TruthGrade.TRUE),
    (TruthGrade.TRUE, TruthGrade.F_MINUS),
    (TruthGrade.F_MINUS, TruthGrade.F_LOW_MINUS),
    (TruthGrade.F_LOW_MINUS, TruthGrade.FALSE),
    (TruthGrade.TRUE, TruthGrade.T_MINUS),
    (TruthGrade.T_MINUS, TruthGrade.T_LOW_MINUS),
    (TruthGrade.T_LOW_MINUS, TruthGrade.FALSE),
)

BRANCH_POLICIES = ("weak-falsity", "weak-truth")


def tsr_step(
    grade: TruthGrade,
    evidence: str,
    branch_policy: str = "weak-falsity",
) -> TruthGrade:
    """Move one grade along (oppose) or against (support) the edges.

    The walk branches when opposing at T and when supporting at F; the
    policy picks the falsity-side chain by default. Steps saturate at
    the endpoints.
    """
    if evidence not in ("support", "oppose"):
        raise ValueError(f"evidence must be support or oppose, got {evidence!r}")
    if branch_policy not in BRANCH_POLICIES:
        raise ValueError(f"unknown branch policy {branch_policy!r}")
    if evidence == "oppose":
        successors = [b for a, b in TSR_EDGES if a is grade]
        if not successors:
            return grade
        if len(successors) == 1:
            return successors[0]
        pick = TruthGrade.F_MINUS if branch_policy == "weak-falsity" else TruthGrade.T_MINUS
        return pick
    predecessors = [a for a, b in TSR_EDGES if b is grade]
    if not predecessors:
        return grade
    if len(predecessors) == 1:
        return predecessors[0]
    pick = TruthGrade.F_LOW_MINUS if branch_policy == "weak-falsity" else TruthGrade.T_LOW_MINUS
    return pick


def tsr_walk(
    start: TruthGrade,
    evidence: Iterable[str],
    branch_policy: str = "weak-falsity",
) -> list[TruthGrade]:
    """Trace of grades visited, starting point included."""
    trace = [start]
    for item in evidence:
        trace.append(tsr_step(trace[-1], item, branch_policy))
    return trace
