"""Maturity-model definitions: types, validation, file format, built-in model.

A model is a versioned set of ordered dimensions, each with ordered levels,
plus the gate checklist used in phase 1 and the weight scale used in phase 3.
Models are immutable values; loading and validation are stateless.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum

from twingauge.errors import ParseError, ValidationError

IDENT_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_.-]*$")

# Engine understands model-format generation 1 only.
SUPPORTED_MAJOR_VERSION = 1

# Importance labels of the 1..5 weight scale, lowest to highest.
WEIGHT_SCORE_LABELS = {
    1: "Low",
    2: "Medium-Low",
    3: "Medium",
    4: "Medium-High",
    5: "High",
}

# Gate item ids the taxonomy rules depend on; required in every model.
GATE_CONTINUITY_P2V = "connection.continuity_p2v"
GATE_INFLUENCE_V2P = "connection.influence_v2p"


class GateCondition(str, Enum):
    CORRESPONDENCE = "Correspondence"
    BIDIRECTIONAL_CONNECTION = "BidirectionalConnection"


@dataclass(frozen=True)
class GateItemDef:
    """One yes/no question of the phase-1 checklist."""

    id: str
    condition: GateCondition
    prompt: str


@dataclass(frozen=True)
class LevelDef:
    """One maturity level within a dimension; index is the 1-based rank."""

    index: int
    code: str
    name: str
    description: str = ""


@dataclass(frozen=True)
class DimensionDef:
    """An evaluation axis with its ordered levels."""

    key: str
    name: str
    levels: tuple[LevelDef, ...]

    @property
    def level_count(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class WeightScale:
    """Inclusive integer range for stakeholder weight scores."""

    min: int = 1
    max: int = 5

    def __contains__(self, score: int) -> bool:
        return self.min <= score <= self.max


@dataclass(frozen=True)
class MaturityModel:
    id: str
    version: str
    dimensions: tuple[DimensionDef, ...]
    gate_checklist_spec: tuple[GateItemDef, ...]
    weight_scale: WeightScale = field(default_factory=WeightScale)

    def dimension(self, key: str) -> DimensionDef:
        for dim in self.dimensions:
            if dim.key == key:
                return dim
        raise KeyError(key)

    @property
    def dimension_keys(self) -> tuple[str, ...]:
        return tuple(d.key for d in self.dimensions)

    def gate_item(self, item_id: str) -> GateItemDef:
        for item in self.gate_checklist_spec:
            if item.id == item_id:
                return item
        raise KeyError(item_id)


@dataclass(frozen=True)
class Violation:
    """One broken model invariant: rule id, path to the element, message."""

    rule: str
    path: str
    message: str


def builtin_model() -> MaturityModel:
    """The built-in four-dimension model (Cap/Cor/Com/Lc) with the six-item
    gate checklist and the 1..5 weight scale. Deterministic on every call."""
    cap = DimensionDef(
        key="Cap",
        name="Capability",
        levels=(
            LevelDef(1, "Cap1", "Synchronous analytic",
                     "Processes live data only: real-time monitoring or control."),
            LevelDef(2, "Cap2", "Historical and descriptive analytic",
                     "Analyzes stored past states, e.g. examining earlier failures."),
            LevelDef(3, "Cap3", "Futuristic and predictive analytic",
                     "Predicts future states from current and historical data."),
            LevelDef(4, "Cap4", "Explainable analytic",
                     "Exposes the reasoning behind its analyses and decisions."),
        ),
    )
    cor = DimensionDef(
        key="Cor",
        name="Cooperability",
        levels=(
            LevelDef(1, "Cor1", "One-to-One",
                     "Represents a single object with no links to other twins."),
            LevelDef(2, "Cor2", "One-to-many in the same environment",
                     "Represents multiple related objects within one operational context."),
            LevelDef(3, "Cor3", "One-to-many in multiple domains",
                     "Represents objects of the same kind across different application domains."),
        ),
    )
    com = DimensionDef(
        key="Com",
        name="Comprehensiveness",
        levels=(
            LevelDef(1, "Com1", "Single aspect",
                     "Mirrors one isolated aspect of the target entity."),
            LevelDef(2, "Com2", "Multiple aspects",
                     "Mirrors several aspects and the interactions between them."),
            LevelDef(3, "Com3", "Abstraction",
                     "Holistic view of the entity with drill-down into any aspect."),
        ),
    )
    lc = DimensionDef(
        key="Lc",
        name="Lifecycle",
        levels=(
            LevelDef(1, "Lc1", "Single phase",
                     "Covers one lifecycle phase (BOL, MOL or EOL) without reuse."),
            LevelDef(2, "Lc2", "Multiple phases",
                     "Covers more than one phase and can be reused across them."),
            LevelDef(3, "Lc3", "Entire lifecycle",
                     "Covers all three phases and switches among them."),
        ),
    )
    gates = (
        GateItemDef(
            "correspondence.isomorphism", GateCondition.CORRESPONDENCE,
            "Does the virtual model preserve the structure of the physical entity's "
            "relationships (parthood, causality)?"),
        GateItemDef(
            "correspondence.replicate", GateCondition.CORRESPONDENCE,
            "Is the physical entity abstracted and reproduced in a digital modeling "
            "language as a virtual counterpart?"),
        GateItemDef(
            "correspondence.scope_scale_declared", GateCondition.CORRESPONDENCE,
            "Are the informational scope (layers of information) and scale (extent of "
            "the system) of the replica declared?"),
        GateItemDef(
            "correspondence.completeness", GateCondition.CORRESPONDENCE,
            "Within the declared scope and scale, does the replica capture all "
            "applicable information and relationships without omission?"),
        GateItemDef(
            GATE_CONTINUITY_P2V, GateCondition.BIDIRECTIONAL_CONNECTION,
            "Is the virtual entity updated continuously from the physical entity "
            "(not a static model or isolated simulation)?"),
        GateItemDef(
            GATE_INFLUENCE_V2P, GateCondition.BIDIRECTIONAL_CONNECTION,
            "Does the virtual entity influence the physical entity, at any autonomy "
            "level from semi- to fully autonomous?"),
    )
    return MaturityModel(
        id="dt-core",
        version="1.0",
        dimensions=(cap, cor, com, lc),
        gate_checklist_spec=gates,
        weight_scale=WeightScale(1, 5),
    )


def validate_model(model: MaturityModel) -> list[Violation]:
    """Check every model invariant; violations are data, never raised."""
    out: list[Violation] = []

    def bad(rule: str, path: str, message: str) -> None:
        out.append(Violation(rule, path, message))

    if not IDENT_RE.match(model.id):
        bad("model-id", "id", f"'{model.id}' is not a valid identifier")
    major = _major_version(model.version)
    if major is None:
        bad("version-format", "version", f"'{model.version}' lacks an integer major version")
    elif major != SUPPORTED_MAJOR_VERSION:
        bad("unknown-major-version", "version",
            f"major version {major} is not supported (engine knows {SUPPORTED_MAJOR_VERSION})")

    if len(model.dimensions) < 2:
        bad("min-dimensions", "dimensions", "a model needs at least 2 dimensions")

    seen_keys: set[str] = set()
    seen_codes: set[str] = set()
    for di, dim in enumerate(model.dimensions):
        path = f"dimensions[{di}]"
        if not IDENT_RE.match(dim.key):
            bad("dimension-key", path, f"'{dim.key}' is not a valid identifier")
        if dim.key in seen_keys:
            bad("duplicate-dimension-key", path, f"duplicate dimension key '{dim.key}'")
        seen_keys.add(dim.key)
        if dim.level_count < 2:
            bad("min-levels", f"{path}.levels",
                f"dimension '{dim.key}' has {dim.level_count} level(s); at least 2 required")
        indices = [lv.index for lv in dim.levels]
        if indices != list(range(1, len(indices) + 1)):
            bad("non-contiguous-level-indices", f"{path}.levels",
                f"level indices {indices} are not the contiguous sequence 1..{len(indices)}")
        for li, lv in enumerate(dim.levels):
            if lv.code in seen_codes:
                bad("duplicate-level-code", f"{path}.levels[{li}]",
                    f"level code '{lv.code}' appears more than once in the model")
            seen_codes.add(lv.code)

    if model.weight_scale.min < 1:
        bad("weight-scale-lower-bound", "weight_scale.min",
            f"weight scale minimum {model.weight_scale.min} must be >= 1")
    if model.weight_scale.max < model.weight_scale.min:
        bad("weight-scale-order", "weight_scale",
            f"max {model.weight_scale.max} below min {model.weight_scale.min}")

    seen_gate_ids: set[str] = set()
    for gi, item in enumerate(model.gate_checklist_spec):
        if item.id in seen_gate_ids:
            bad("duplicate-gate-item", f"gate_items[{gi}]", f"duplicate gate item '{item.id}'")
        seen_gate_ids.add(item.id)
    # The taxonomy rules route on these two sub-conditions by id; models may
    # customize correspondence items but must keep the connection pair.
    for required in (GATE_CONTINUITY_P2V, GATE_INFLUENCE_V2P):
        if required not in seen_gate_ids:
            bad("gate-connection-items", "gate_items",
                f"required connection item '{required}' missing")
    if not any(i.condition is GateCondition.CORRESPONDENCE for i in model.gate_checklist_spec):
        bad("gate-correspondence-items", "gate_items",
            "at least one correspondence item required")

    return out


def _major_version(version: str) -> int | None:
    head = version.split(".", 1)[0]
    return int(head) if head.isdigit() else None


def serialize_model(model: MaturityModel) -> str:
    """Canonical JSON interchange form; load_model(serialize_model(m)) == m."""
    return json.dumps(model_to_doc(model), indent=2)


def model_to_doc(model: MaturityModel) -> dict:
    return {
        "id": model.id,
        "version": model.version,
        "weight_scale": {"min": model.weight_scale.min, "max": model.weight_scale.max},
        "gate_items": [
            {"id": i.id, "condition": i.condition.value, "prompt": i.prompt}
            for i in model.gate_checklist_spec
        ],
        "dimensions": [
            {
                "key": d.key,
                "name": d.name,
                "levels": [
                    {"index": lv.index, "code": lv.code, "name": lv.name,
                     "description": lv.description}
                    for lv in d.levels
                ],
            }
            for d in model.dimensions
        ],
    }


def load_model(document: str) -> MaturityModel:
    """Parse a model definition document and enforce all invariants.

    Raises ParseError for malformed documents, ValidationError (with the
    violated rules named) for well-formed ones breaking an invariant.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         position=f"line {exc.lineno}, column {exc.colno}") from exc
    model = model_from_doc(doc)
    violations = validate_model(model)
    if violations:
        raise ValidationError(violations)
    return model


def model_from_doc(doc) -> MaturityModel:
    """Build the value from parsed JSON; structural problems are ParseErrors."""
    if not isinstance(doc, dict):
        raise ParseError("model document must be an object")
    try:
        scale_doc = doc.get("weight_scale", {"min": 1, "max": 5})
        scale = WeightScale(int(scale_doc["min"]), int(scale_doc["max"]))
        gates = tuple(
            GateItemDef(
                id=str(item["id"]),
                condition=GateCondition(item["condition"]),
                prompt=str(item.get("prompt", "")),
            )
            for item in doc.get("gate_items", [])
        )
        dims = tuple(
            DimensionDef(
                key=str(d["key"]),
                name=str(d.get("name", d["key"])),
                levels=tuple(
                    LevelDef(
                        index=int(lv["index"]),
                        code=str(lv["code"]),
                        name=str(lv["name"]),
                        description=str(lv.get("description", "")),
                    )
                    for lv in d["levels"]
                ),
            )
            for d in doc["dimensions"]
        )
        return MaturityModel(
            id=str(doc["id"]),
            version=str(doc["version"]),
            dimensions=dims,
            gate_checklist_spec=gates,
            weight_scale=scale,
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
