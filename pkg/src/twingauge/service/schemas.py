"""Pydantic request/response models for the HTTP API.

Responses carrying scores embed every exact number as a RationalValue
({decimal, rational, display}); the `rational` field is lossless and the
`display` string is the only rendering clients should show.
"""

from __future__ import annotations

from typing import Union

from pydantic import BaseModel, Field


class RationalValue(BaseModel):
    decimal: str
    rational: str
    display: str


class ModelRefPayload(BaseModel):
    id: str
    version: str


class SubjectPayload(BaseModel):
    name: str
    description: str | None = None


class GateAnswersPayload(BaseModel):
    answers: dict[str, bool]
    notes: dict[str, str] = Field(default_factory=dict)


class AssessmentCreate(BaseModel):
    subject: SubjectPayload
    model_ref: ModelRefPayload
    gate_answers: GateAnswersPayload
    levels: dict[str, int]
    weight_scores: dict[str, int]
    rater: str | None = None
    timestamp: str | None = None  # RFC 3339; server clock when omitted


class AssessmentDoc(BaseModel):
    id: str | None
    subject: SubjectPayload
    model_ref: ModelRefPayload
    gate_answers: GateAnswersPayload
    levels: dict[str, int]
    weight_scores: dict[str, int]
    rater: str | None
    timestamp: str


class ModelSummary(BaseModel):
    id: str
    version: str


class DimensionScorePayload(BaseModel):
    key: str
    level: int
    maturity: RationalValue
    weight_score: Union[int, RationalValue]
    normalized_weight: RationalValue


class ScoreReportPayload(BaseModel):
    model_ref: ModelRefPayload
    rounding_policy: str
    cap_applied: bool
    dimensions: list[DimensionScorePayload]
    overall: RationalValue


class HistoryEntry(BaseModel):
    model_ref: ModelRefPayload
    rounding_policy: str
    cap_applied: bool
    dimensions: list[DimensionScorePayload]
    overall: RationalValue
    scored_at: str


class GateRequest(BaseModel):
    model_ref: ModelRefPayload | None = None  # default: the built-in model
    gate_answers: GateAnswersPayload


class GateVerdictPayload(BaseModel):
    passed: bool
    taxonomy: str
    failed_items: list[str]
    report: str | None = None


class WhatIfOverrides(BaseModel):
    levels: dict[str, int] = Field(default_factory=dict)
    weight_scores: dict[str, int] = Field(default_factory=dict)


class WhatIfRequest(BaseModel):
    assessment_id: str | None = None
    assessment: AssessmentCreate | None = None  # inline alternative
    overrides: WhatIfOverrides = Field(default_factory=WhatIfOverrides)


class WhatIfResponse(BaseModel):
    overrides: WhatIfOverrides
    result: ScoreReportPayload
    delta_L: RationalValue
    base_overall: RationalValue


class SeriesPointPayload(BaseModel):
    subject: str
    dimension: str
    maturity: RationalValue
    normalized_weight: RationalValue
    quadrant: str


class CompareSubject(BaseModel):
    id: str
    report: ScoreReportPayload


class CompareResponse(BaseModel):
    subjects: list[CompareSubject]
    series: list[SeriesPointPayload]
    ranking: list[str]
    ties: list[list[str]]
    weight_boundary: RationalValue
    maturity_boundary: RationalValue


class QuadrantsPayload(BaseModel):
    labels: dict[str, str]
    weight_boundary: RationalValue
    maturity_boundary: RationalValue


class ScoreResponse(ScoreReportPayload):
    pass


class HealthPayload(BaseModel):
    status: str
    models: int


class ApiErrorPayload(BaseModel):
    code: str
    message: str
    path: str | None = None
    verdict: GateVerdictPayload | None = None  # present on GateRefusal
