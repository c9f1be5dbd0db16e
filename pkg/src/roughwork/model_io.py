"""Loading model files.

A model file is JSON with a universe plus exactly one of a partition or
a list of generating relation pairs. Optional sections add explicit
granules, lower/upper operator tables, a property system, and named
case spaces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from roughwork.approx import ApproximationSpace, Subset, UnknownAtomError
from roughwork.granular import GranularModel, OperatorTable, from_space
from roughwork.opposition import CaseSpace
from roughwork.propsys import PropertySystem


class ModelFormatError(ValueError):
    """The model file is syntactically or structurally invalid."""


_KNOWN_KEYS = {
    "universe",
    "partition",
    "relationPairs",
    "granules",
    "lowerTable",
    "upperTable",
    "propertySystem",
    "caseSpaces",
}


@dataclass
class LoadedModel:
    space: ApproximationSpace
    granular: GranularModel
    property_system: PropertySystem | None = None
    case_spaces: dict[str, CaseSpace] = field(default_factory=dict)
    source: str = ""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ModelFormatError(message)


def _parse_table(space: ApproximationSpace, raw: object, label: str) -> OperatorTable:
    _require(isinstance(raw, dict), f"{label} must be an object")
    universe = space.universe
    entries: dict[int, int] = {}
    for key, value in raw.items():
        try:
            entries[universe.parse(key).mask] = universe.parse(value).mask
        except (UnknownAtomError, TypeError) as exc:
            raise ModelFormatError(f"{label} entry {key!r}: {exc}") from exc
    try:
        return OperatorTable(universe, entries)
    except ValueError as exc:
        raise ModelFormatError(f"{label}: {exc}") from exc


def _parse_granules(space: ApproximationSpace, raw: object) -> tuple[Subset, ...]:
    _require(isinstance(raw, list) and raw, "granules must be a nonempty list")
    out = []
    for names in raw:
        _require(isinstance(names, list), "each granule must be a list of atoms")
        try:
            out.append(space.universe.subset(names))
        except UnknownAtomError as exc:
            raise ModelFormatError(f"granule {names!r}: {exc}") from exc
    return tuple(out)


def _parse_property_system(raw: object) -> PropertySystem:
    _require(isinstance(raw, dict), "propertySystem must be an object")
    for key in ("objects", "properties", "manifests"):
        _require(key in raw, f"propertySystem needs {key!r}")
    try:
        return PropertySystem.build(
            raw["objects"],
            raw["properties"],
            [tuple(pair) for pair in raw["manifests"]],
        )
    except (ValueError, TypeError) as exc:
        raise ModelFormatError(f"propertySystem: {exc}") from exc


def _parse_case_space(name: str, raw: object) -> CaseSpace:
    _require(isinstance(raw, dict), f"case space {name!r} must be an object")
    _require("worlds" in raw and "valuation" in raw,
             f"case space {name!r} needs worlds and valuation")
    worlds = raw["worlds"]
    _require(isinstance(worlds, list), f"case space {name!r}: worlds must be a list")
    valuation_raw = raw["valuation"]
    _require(isinstance(valuation_raw, dict),
             f"case space {name!r}: valuation must be an object")
    valuation = {}
    for sentence, per_world in valuation_raw.items():
        _require(isinstance(per_world, dict),
                 f"case space {name!r}: valuation for {sentence!r} must be an object")
        valuation[sentence] = {
            world: tuple(bool(bit) for bit in bits)
            for world, bits in per_world.items()
        }
    try:
        return CaseSpace(tuple(worlds), valuation)
    except ValueError as exc:
        raise ModelFormatError(f"case space {name!r}: {exc}") from exc


def load_model(path: str | Path) -> LoadedModel:
    """Read and validate a model file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{path}: not valid JSON: {exc}") from exc
    return parse_model(raw, source=str(path))


def parse_model(raw: object, source: str = "<memory>") -> LoadedModel:
    _require(isinstance(raw, dict), "model file must be a JSON object")
    unknown = set(raw) - _KNOWN_KEYS
    _require(not unknown, f"unknown keys: {sorted(unknown)}")

    universe_raw = raw.get("universe")
    _require(isinstance(universe_raw, list) and universe_raw,
             "universe must be a nonempty list of atom names")
    _require(all(isinstance(a, str) for a in universe_raw),
             "universe atoms must be strings")

    has_partition = "partition" in raw
    has_pairs = "relationPairs" in raw
    _require(has_partition != has_pairs,
             "exactly one of partition or relationPairs is required")

    try:
        if has_partition:
            space = ApproximationSpace.from_partition(universe_raw, raw["partition"])
        else:
            pairs = [tuple(p) for p in raw["relationPairs"]]
            space = ApproximationSpace.from_pairs(universe_raw, pairs)
    except (ValueError, TypeError) as exc:
        raise ModelFormatError(str(exc)) from exc

    has_lower = "lowerTable" in raw
    has_upper = "upperTable" in raw
    _require(has_lower == has_upper,
             "lowerTable and upperTable must be given together")

    if has_lower:
        lower_op = _parse_table(space, raw["lowerTable"], "lowerTable")
        upper_op = _parse_table(space, raw["upperTable"], "upperTable")
    else:
        lower_op = OperatorTable.from_callable(space.universe, space.lower)
        upper_op = OperatorTable.from_callable(space.universe, space.upper)

    if "granules" in raw:
        granules = _parse_granules(space, raw["granules"])
    else:
        granules = tuple(space.blocks)

    granular = GranularModel(
        universe=space.universe,
        granules=granules,
        lower_op=lower_op,
        upper_op=upper_op,
    )

    property_system = None
    if "propertySystem" in raw:
        property_system = _parse_property_system(raw["propertySystem"])

    case_spaces = {}
    if "caseSpaces" in raw:
        _require(isinstance(raw["caseSpaces"], dict), "caseSpaces must be an object")
        for name, body in raw["caseSpaces"].items():
            case_spaces[name] = _parse_case_space(name, body)

    return LoadedModel(
        space=space,
        granular=granular,
        property_system=property_system,
        case_spaces=case_spaces,
        source=source,
    )


def default_model_path() -> Path:
    """Bundled example model shipped with the package."""
    from importlib.resources import files

    return Path(str(files("roughwork") / "data" / "example.json"))
