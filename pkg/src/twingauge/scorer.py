"""Phases 2+3: level normalization, capped weight normalization, overall score.

A dimension's maturity is its chosen level over its level count (n/N). Weight
scores normalize to fractions of their sum, with a 0.5 cap on any single
dimension; a capped remainder redistributes proportionally over the others.
The overall score is the weight-averaged maturity. Everything is exact
rational arithmetic; rounding exists only in rendered strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction

from twingauge import rational
from twingauge.errors import ConsistencyError, DomainError, GateRefusal
from twingauge.gatekeeper import GateChecklist, checklist_from_doc, checklist_to_doc, evaluate_gates
from twingauge.schema import MaturityModel

DEFAULT_CAP = Fraction(1, 2)


class RoundingPolicy(str, Enum):
    EXACT = "Exact"
    DISPLAY_2DP = "Display2dp"


@dataclass(frozen=True)
class ModelRef:
    id: str
    version: str


@dataclass(frozen=True)
class Subject:
    name: str
    description: str | None = None


@dataclass(frozen=True)
class Assessment:
    """One subject's phase-1 answers plus chosen levels and weight scores."""

    subject: Subject
    model_ref: ModelRef
    gate_answers: GateChecklist
    levels: dict[str, int]
    weight_scores: dict[str, int]
    rater: str | None = None
    timestamp: datetime = field(
        default_factory=lambda: datetime.now(timezone.utc).replace(microsecond=0)
    )
    id: str | None = None  # assigned by the store


@dataclass(frozen=True)
class WeightVector:
    weights: dict[str, Fraction]
    cap: Fraction = DEFAULT_CAP
    cap_applied: bool = False


@dataclass(frozen=True)
class DimensionScore:
    key: str
    level: int
    maturity: Fraction
    weight_score: int | Fraction
    normalized_weight: Fraction


@dataclass(frozen=True)
class ScoreReport:
    model_ref: ModelRef
    dimensions: tuple[DimensionScore, ...]
    overall: Fraction
    rounding_policy: RoundingPolicy = RoundingPolicy.EXACT
    cap_applied: bool = False

    def maturities(self) -> dict[str, Fraction]:
        return {d.key: d.maturity for d in self.dimensions}

    def normalized_weights(self) -> dict[str, Fraction]:
        return {d.key: d.normalized_weight for d in self.dimensions}


def dimension_maturity(n: int, total_levels: int) -> Fraction:
    """Exact n/N for a chosen level n in a dimension with N >= 2 levels."""
    if total_levels < 2:
        raise DomainError(f"dimension needs at least 2 levels, got {total_levels}")
    if not 1 <= n <= total_levels:
        raise DomainError(f"level {n} outside 1..{total_levels}")
    return Fraction(n, total_levels)


def normalize_weights(
    scores: dict[str, int | Fraction], cap: Fraction = DEFAULT_CAP
) -> WeightVector:
    """Normalize weight scores to a vector summing to exactly 1.

    If one raw weight exceeds the cap it is pinned there and the remaining
    mass (1 - cap) is split over the other dimensions proportionally to
    their raw scores. With all scores positive at most one raw weight can
    exceed 1/2, so a single pass suffices.
    """
    if len(scores) < 2:
        raise DomainError(f"need at least 2 dimensions, got {len(scores)}")
    exact = {k: Fraction(v) for k, v in scores.items()}
    for key, score in exact.items():
        if score <= 0:
            raise DomainError(f"weight score for '{key}' must be positive, got {score}")
    if not 0 < cap <= 1:
        raise DomainError(f"cap must be in (0, 1], got {cap}")

    total = sum(exact.values())
    raw = {k: v / total for k, v in exact.items()}
    over = [k for k, w in raw.items() if w > cap]
    if not over:
        return WeightVector(weights=raw, cap=cap, cap_applied=False)
    if len(over) > 1:
        # Unreachable for cap >= 1/2; guards misuse with smaller caps.
        raise DomainError(f"{len(over)} weights exceed the cap {cap}; redistribution undefined")

    capped = over[0]
    rest_total = total - exact[capped]
    weights = {
        k: (cap if k == capped else (1 - cap) * exact[k] / rest_total) for k in exact
    }
    if sum(weights.values()) != 1 or any(w > cap for w in weights.values()):
        raise ConsistencyError("weight redistribution broke its own invariant")
    return WeightVector(weights=weights, cap=cap, cap_applied=True)


def overall_score(maturities: dict[str, Fraction], weights: WeightVector) -> Fraction:
    """Exact sum of per-dimension maturity times normalized weight."""
    if set(maturities) != set(weights.weights):
        raise DomainError(
            f"dimension keys differ: {sorted(maturities)} vs {sorted(weights.weights)}"
        )
    return sum((maturities[k] * weights.weights[k] for k in maturities), Fraction(0))


def validate_assessment(a: Assessment, model: MaturityModel) -> None:
    """Raise DomainError unless the assessment fits the model's shape."""
    if (a.model_ref.id, a.model_ref.version) != (model.id, model.version):
        raise DomainError(
            f"assessment references {a.model_ref.id}@{a.model_ref.version}, "
            f"not {model.id}@{model.version}"
        )
    keys = set(model.dimension_keys)
    if set(a.levels) != keys:
        raise DomainError(f"levels must cover exactly {sorted(keys)}, got {sorted(a.levels)}")
    if set(a.weight_scores) != keys:
        raise DomainError(
            f"weight_scores must cover exactly {sorted(keys)}, got {sorted(a.weight_scores)}"
        )
    for dim in model.dimensions:
        n = a.levels[dim.key]
        if not 1 <= n <= dim.level_count:
            raise DomainError(
                f"level {n} for '{dim.key}' outside 1..{dim.level_count}"
            )
        w = a.weight_scores[dim.key]
        if w not in model.weight_scale:
            raise DomainError(
                f"weight score {w} for '{dim.key}' outside scale "
                f"{model.weight_scale.min}..{model.weight_scale.max}"
            )


def score_assessment(
    a: Assessment,
    model: MaturityModel,
    policy: RoundingPolicy = RoundingPolicy.EXACT,
) -> ScoreReport:
    """Run the full pipeline: gates, maturities, weights, overall score.

    Raises GateRefusal (carrying the verdict) when the subject fails phase 1;
    a gated-out subject is never scored.
    """
    validate_assessment(a, model)
    verdict = evaluate_gates(a.gate_answers, model)
    if not verdict.passed:
        raise GateRefusal(verdict)

    weights = normalize_weights(a.weight_scores)
    dims = tuple(
        DimensionScore(
            key=dim.key,
            level=a.levels[dim.key],
            maturity=dimension_maturity(a.levels[dim.key], dim.level_count),
            weight_score=a.weight_scores[dim.key],
            normalized_weight=weights.weights[dim.key],
        )
        for dim in model.dimensions
    )
    overall = overall_score({d.key: d.maturity for d in dims}, weights)
    return ScoreReport(
        model_ref=a.model_ref,
        dimensions=dims,
        overall=overall,
        rounding_policy=policy,
        cap_applied=weights.cap_applied,
    )


def aggregate_weight_scores(ratings: list[dict[str, int]]) -> dict[str, Fraction]:
    """Arithmetic mean of several raters' weight scores, as exact rationals.

    The result feeds normalize_weights directly; the integer scale applies
    to individual ratings, not the mean.
    """
    if not ratings:
        raise DomainError("no ratings to aggregate")
    keys = set(ratings[0])
    for r in ratings[1:]:
        if set(r) != keys:
            raise DomainError("all ratings must cover the same dimensions")
    return {
        k: Fraction(sum(r[k] for r in ratings), len(ratings)) for k in keys
    }


def render_score(x: Fraction, policy: RoundingPolicy) -> str:
    if policy is RoundingPolicy.DISPLAY_2DP:
        return rational.display_2dp(x)
    return rational.decimal_string(x)


# --- document encoding -----------------------------------------------------

RFC3339_FMT = "%Y-%m-%dT%H:%M:%SZ"


def timestamp_to_doc(ts: datetime) -> str:
    ts = ts.astimezone(timezone.utc)
    if ts.microsecond:
        return ts.isoformat().replace("+00:00", "Z")
    return ts.strftime(RFC3339_FMT)


def timestamp_from_doc(text: str) -> datetime:
    return datetime.fromisoformat(text.replace("Z", "+00:00"))


def assessment_to_doc(a: Assessment) -> dict:
    return {
        "id": a.id,
        "subject": {"name": a.subject.name, "description": a.subject.description},
        "model_ref": {"id": a.model_ref.id, "version": a.model_ref.version},
        "gate_answers": checklist_to_doc(a.gate_answers),
        "levels": dict(a.levels),
        "weight_scores": dict(a.weight_scores),
        "rater": a.rater,
        "timestamp": timestamp_to_doc(a.timestamp),
    }


def assessment_from_doc(doc: dict) -> Assessment:
    subject = doc.get("subject", {})
    if isinstance(subject, str):
        subject = {"name": subject}
    return Assessment(
        subject=Subject(name=str(subject.get("name", "")),
                        description=subject.get("description")),
        model_ref=ModelRef(id=str(doc["model_ref"]["id"]),
                           version=str(doc["model_ref"]["version"])),
        gate_answers=checklist_from_doc(doc.get("gate_answers", {})),
        levels={str(k): int(v) for k, v in doc.get("levels", {}).items()},
        weight_scores={str(k): int(v) for k, v in doc.get("weight_scores", {}).items()},
        rater=doc.get("rater"),
        timestamp=timestamp_from_doc(doc["timestamp"]),
        id=doc.get("id"),
    )


def with_id(a: Assessment, new_id: str) -> Assessment:
    return replace(a, id=new_id)


def score_report_to_doc(report: ScoreReport, scored_at: datetime | None = None) -> dict:
    doc = {
        "model_ref": {"id": report.model_ref.id, "version": report.model_ref.version},
        "rounding_policy": report.rounding_policy.value,
        "cap_applied": report.cap_applied,
        "dimensions": [
            {
                "key": d.key,
                "level": d.level,
                "maturity": rational.to_wire(d.maturity),
                "weight_score": (
                    d.weight_score if isinstance(d.weight_score, int)
                    else rational.to_wire(Fraction(d.weight_score))
                ),
                "normalized_weight": rational.to_wire(d.normalized_weight),
            }
            for d in report.dimensions
        ],
        "overall": rational.to_wire(report.overall),
    }
    if scored_at is not None:
        doc["scored_at"] = timestamp_to_doc(scored_at)
    return doc


def score_report_from_doc(doc: dict) -> ScoreReport:
    dims = tuple(
        DimensionScore(
            key=str(d["key"]),
            level=int(d["level"]),
            maturity=rational.from_wire(d["maturity"]),
            weight_score=(
                d["weight_score"] if isinstance(d["weight_score"], int)
                else rational.from_wire(d["weight_score"])
            ),
            normalized_weight=rational.from_wire(d["normalized_weight"]),
        )
        for d in doc["dimensions"]
    )
    return ScoreReport(
        model_ref=ModelRef(id=str(doc["model_ref"]["id"]),
                           version=str(doc["model_ref"]["version"])),
        dimensions=dims,
        overall=rational.from_wire(doc["overall"]),
        rounding_policy=RoundingPolicy(doc.get("rounding_policy", "Exact")),
        cap_applied=bool(doc.get("cap_applied", False)),
    )
