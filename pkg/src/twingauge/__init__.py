"""Digital-twin maturity assessment engine.

Three phases: fundamental-condition gating (gatekeeper), four-dimensional
level classification (schema), and weighted maturity scoring (scorer), with
gap analysis and what-if exploration (analysis), file-backed persistence
(store), a CLI, and an HTTP service.
"""

__version__ = "0.1.0"

from twingauge.analysis import (
    ComparisonReport,
    Quadrant,
    QuadrantLabel,
    WhatIfDelta,
    compare,
    gap_quadrants,
    sensitivity_sweep,
    what_if,
)
from twingauge.errors import (
    BindError,
    ConsistencyError,
    DomainError,
    GateRefusal,
    IncompleteChecklist,
    LockHeld,
    ModelMismatch,
    NotFound,
    ParseError,
    StorageError,
    TwinGaugeError,
    UnknownModel,
    ValidationError,
)
from twingauge.gatekeeper import (
    GateChecklist,
    GateVerdict,
    Taxonomy,
    evaluate_gates,
    gate_report,
)
from twingauge.schema import (
    DimensionDef,
    GateItemDef,
    LevelDef,
    MaturityModel,
    Violation,
    WeightScale,
    builtin_model,
    load_model,
    serialize_model,
    validate_model,
)
from twingauge.scorer import (
    Assessment,
    ModelRef,
    RoundingPolicy,
    ScoreReport,
    Subject,
    WeightVector,
    aggregate_weight_scores,
    dimension_maturity,
    normalize_weights,
    overall_score,
    score_assessment,
)
from twingauge.store import Workspace

__all__ = [
    "Assessment",
    "BindError",
    "ComparisonReport",
    "ConsistencyError",
    "DimensionDef",
    "DomainError",
    "GateChecklist",
    "GateItemDef",
    "GateRefusal",
    "GateVerdict",
    "IncompleteChecklist",
    "LevelDef",
    "LockHeld",
    "MaturityModel",
    "ModelMismatch",
    "ModelRef",
    "NotFound",
    "ParseError",
    "Quadrant",
    "QuadrantLabel",
    "RoundingPolicy",
    "ScoreReport",
    "StorageError",
    "Subject",
    "Taxonomy",
    "TwinGaugeError",
    "UnknownModel",
    "ValidationError",
    "Violation",
    "WeightScale",
    "WeightVector",
    "WhatIfDelta",
    "Workspace",
    "aggregate_weight_scores",
    "builtin_model",
    "compare",
    "dimension_maturity",
    "evaluate_gates",
    "gap_quadrants",
    "gate_report",
    "load_model",
    "normalize_weights",
    "overall_score",
    "score_assessment",
    "sensitivity_sweep",
    "serialize_model",
    "validate_model",
    "what_if",
]
