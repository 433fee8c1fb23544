"""Phase-3 interpretation: gap quadrants, portfolio comparison, what-if.

Quadrants place each dimension by normalized weight against maturity; the
default boundaries (equal share 1/k, maturity 1/2) are explicit parameters
recorded in every result, and values exactly on a boundary count as high.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from twingauge import rational
from twingauge.errors import DomainError, ModelMismatch
from twingauge.scorer import (
    Assessment,
    RoundingPolicy,
    ScoreReport,
    score_assessment,
)
from twingauge.schema import MaturityModel

DEFAULT_MATURITY_BOUNDARY = Fraction(1, 2)


class Quadrant(str, Enum):
    DEVELOPMENT_FOCUS = "DevelopmentFocus"          # high weight, low maturity
    REALLOCATION_CANDIDATE = "ReallocationCandidate"  # low weight, high maturity
    ALIGNED_STRONG = "Aligned-Strong"               # high weight, high maturity
    ALIGNED_LOW = "Aligned-Low"                     # low weight, low maturity


@dataclass(frozen=True)
class QuadrantLabel:
    """Per-dimension quadrant labels plus the boundaries that produced them."""

    labels: dict[str, Quadrant]
    weight_boundary: Fraction
    maturity_boundary: Fraction


@dataclass(frozen=True)
class SeriesPoint:
    """One chart/CSV row: a subject's position on one dimension."""

    subject: str
    dimension: str
    maturity: Fraction
    normalized_weight: Fraction
    quadrant: Quadrant


@dataclass(frozen=True)
class ComparisonReport:
    subjects: tuple[tuple[str, ScoreReport], ...]  # (assessment id, report)
    series: tuple[SeriesPoint, ...]
    ranking: tuple[str, ...]  # assessment ids, best first
    ties: tuple[tuple[str, ...], ...]  # groups with exactly equal overall score
    weight_boundary: Fraction
    maturity_boundary: Fraction


@dataclass(frozen=True)
class WhatIfDelta:
    base: Assessment
    overrides: dict
    result: ScoreReport
    delta_overall: Fraction


def classify_quadrant(
    weight: Fraction,
    maturity: Fraction,
    weight_boundary: Fraction,
    maturity_boundary: Fraction,
) -> Quadrant:
    high_weight = weight >= weight_boundary
    high_maturity = maturity >= maturity_boundary
    if high_weight and not high_maturity:
        return Quadrant.DEVELOPMENT_FOCUS
    if not high_weight and high_maturity:
        return Quadrant.REALLOCATION_CANDIDATE
    if high_weight:
        return Quadrant.ALIGNED_STRONG
    return Quadrant.ALIGNED_LOW


def gap_quadrants(
    report: ScoreReport,
    weight_boundary: Fraction | None = None,
    maturity_boundary: Fraction = DEFAULT_MATURITY_BOUNDARY,
) -> QuadrantLabel:
    """Label each dimension of a score report; boundary values count as high.

    The weight boundary defaults to the equal share 1/k for k dimensions.
    """
    k = len(report.dimensions)
    if k < 2:
        raise DomainError(f"need at least 2 dimensions, got {k}")
    wb = Fraction(1, k) if weight_boundary is None else weight_boundary
    labels = {
        d.key: classify_quadrant(d.normalized_weight, d.maturity, wb, maturity_boundary)
        for d in report.dimensions
    }
    return QuadrantLabel(labels=labels, weight_boundary=wb, maturity_boundary=maturity_boundary)


def series_rows(
    subject: str, report: ScoreReport, quadrants: QuadrantLabel
) -> list[SeriesPoint]:
    return [
        SeriesPoint(
            subject=subject,
            dimension=d.key,
            maturity=d.maturity,
            normalized_weight=d.normalized_weight,
            quadrant=quadrants.labels[d.key],
        )
        for d in report.dimensions
    ]


def compare(portfolio: list[tuple[Assessment, ScoreReport]]) -> ComparisonReport:
    """Rank subjects by overall score and build the per-dimension series.

    All assessments must reference one model id+version. Ties are exact
    rational equality; within a tie, earlier timestamp ranks first.
    """
    if not portfolio:
        raise DomainError("empty portfolio")
    ref = portfolio[0][1].model_ref
    for _, report in portfolio:
        if report.model_ref != ref:
            raise ModelMismatch(
                f"mixed models: {report.model_ref.id}@{report.model_ref.version} "
                f"vs {ref.id}@{ref.version}"
            )

    entries = []
    for a, report in portfolio:
        aid = a.id or a.subject.name
        entries.append((aid, a, report))

    ordered = sorted(entries, key=lambda e: (-e[2].overall, e[1].timestamp))
    ranking = tuple(aid for aid, _, _ in ordered)

    ties: list[tuple[str, ...]] = []
    by_score: dict[Fraction, list[str]] = {}
    for aid, _, report in ordered:
        by_score.setdefault(report.overall, []).append(aid)
    for group in by_score.values():
        if len(group) > 1:
            ties.append(tuple(group))

    series: list[SeriesPoint] = []
    for aid, a, report in entries:
        quadrants = gap_quadrants(report)
        series.extend(series_rows(a.subject.name, report, quadrants))
    wb = Fraction(1, len(portfolio[0][1].dimensions))
    return ComparisonReport(
        subjects=tuple((aid, report) for aid, _, report in entries),
        series=tuple(series),
        ranking=ranking,
        ties=tuple(ties),
        weight_boundary=wb,
        maturity_boundary=DEFAULT_MATURITY_BOUNDARY,
    )


def what_if(base: Assessment, overrides: dict, model: MaturityModel) -> WhatIfDelta:
    """Re-score with partial level/weight overrides; the base is unmodified.

    overrides = {"levels": {dim: n, ...}, "weight_scores": {dim: w, ...}},
    either map optional. Out-of-range overrides raise DomainError.
    """
    level_over = dict(overrides.get("levels", {}))
    weight_over = dict(overrides.get("weight_scores", {}))
    known = set(model.dimension_keys)
    for key in (*level_over, *weight_over):
        if key not in known:
            raise DomainError(f"override names unknown dimension '{key}'")

    merged = replace(
        base,
        levels={**base.levels, **{k: int(v) for k, v in level_over.items()}},
        weight_scores={**base.weight_scores, **{k: int(v) for k, v in weight_over.items()}},
    )
    base_report = score_assessment(base, model)
    result = score_assessment(merged, model)
    return WhatIfDelta(
        base=base,
        overrides={"levels": level_over, "weight_scores": weight_over},
        result=result,
        delta_overall=result.overall - base_report.overall,
    )


def sensitivity_sweep(
    base: Assessment, dimension_key: str, model: MaturityModel
) -> list[tuple[int, Fraction]]:
    """Overall score for every weight score of one dimension, rest fixed."""
    if dimension_key not in model.dimension_keys:
        raise DomainError(f"unknown dimension '{dimension_key}'")
    rows = []
    for w in range(model.weight_scale.min, model.weight_scale.max + 1):
        merged = replace(base, weight_scores={**base.weight_scores, dimension_key: w})
        rows.append((w, score_assessment(merged, model).overall))
    return rows


# --- exports ----------------------------------------------------------------

CSV_COLUMNS = ("subject", "dimension", "maturity", "normalized_weight", "quadrant")


def series_to_csv(series: list[SeriesPoint] | tuple[SeriesPoint, ...]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for p in series:
        writer.writerow([
            p.subject,
            p.dimension,
            rational.decimal_string(p.maturity),
            rational.decimal_string(p.normalized_weight),
            p.quadrant.value,
        ])
    return buf.getvalue()


_PALETTE = ("#2563eb", "#dc2626", "#059669", "#d97706", "#7c3aed", "#0891b2")


def _svg_header(width: int, height: int, title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<title>{title}</title>',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]


def radar_svg(series: list[SeriesPoint] | tuple[SeriesPoint, ...], size: int = 420) -> str:
    """Radar chart of per-dimension maturity, one polygon per subject."""
    dims: list[str] = []
    for p in series:
        if p.dimension not in dims:
            dims.append(p.dimension)
    subjects: list[str] = []
    for p in series:
        if p.subject not in subjects:
            subjects.append(p.subject)
    if not dims:
        raise DomainError("empty series")

    cx = cy = size / 2
    radius = size / 2 - 60

    def point(di: int, value: float) -> tuple[float, float]:
        angle = -math.pi / 2 + 2 * math.pi * di / len(dims)
        return (cx + radius * value * math.cos(angle),
                cy + radius * value * math.sin(angle))

    parts = _svg_header(size, size, "Dimensional maturity radar")
    for ring in (0.25, 0.5, 0.75, 1.0):
        ring_pts = " ".join(f"{x:.1f},{y:.1f}" for x, y in
                            (point(i, ring) for i in range(len(dims))))
        parts.append(f'<polygon points="{ring_pts}" fill="none" stroke="#d4d4d8"/>')
    for i, dim in enumerate(dims):
        x, y = point(i, 1.0)
        parts.append(f'<line x1="{cx}" y1="{cy}" x2="{x:.1f}" y2="{y:.1f}" stroke="#d4d4d8"/>')
        lx, ly = point(i, 1.14)
        parts.append(f'<text x="{lx:.1f}" y="{ly:.1f}" text-anchor="middle">{dim}</text>')

    values = {(p.subject, p.dimension): float(p.maturity) for p in series}
    for si, subject in enumerate(subjects):
        color = _PALETTE[si % len(_PALETTE)]
        pts = " ".join(
            f"{x:.1f},{y:.1f}" for x, y in
            (point(i, values.get((subject, d), 0.0)) for i, d in enumerate(dims))
        )
        parts.append(
            f'<polygon points="{pts}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="12" y="{20 + 16 * si}" fill="{color}">{subject}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def quadrant_svg(
    series: list[SeriesPoint] | tuple[SeriesPoint, ...],
    weight_boundary: Fraction,
    maturity_boundary: Fraction = DEFAULT_MATURITY_BOUNDARY,
    size: int = 420,
) -> str:
    """Weight (x) vs maturity (y) scatter with the declared boundary lines."""
    margin = 50
    plot = size - 2 * margin

    def to_x(w: float) -> float:
        return margin + plot * min(w, 1.0)

    def to_y(m: float) -> float:
        return size - margin - plot * min(m, 1.0)

    parts = _svg_header(size, size, "Weight vs maturity gap quadrants")
    parts.append(
        f'<rect x="{margin}" y="{margin}" width="{plot}" height="{plot}" '
        f'fill="none" stroke="#52525b"/>'
    )
    bx = to_x(float(weight_boundary))
    by = to_y(float(maturity_boundary))
    parts.append(f'<line x1="{bx:.1f}" y1="{margin}" x2="{bx:.1f}" y2="{size - margin}" '
                 f'stroke="#a1a1aa" stroke-dasharray="4 3"/>')
    parts.append(f'<line x1="{margin}" y1="{by:.1f}" x2="{size - margin}" y2="{by:.1f}" '
                 f'stroke="#a1a1aa" stroke-dasharray="4 3"/>')
    parts.append(f'<text x="{size / 2}" y="{size - 12}" text-anchor="middle">'
                 f'normalized weight</text>')
    parts.append(f'<text x="14" y="{size / 2}" text-anchor="middle" '
                 f'transform="rotate(-90 14 {size / 2})">maturity</text>')

    subjects: list[str] = []
    for p in series:
        if p.subject not in subjects:
            subjects.append(p.subject)
    for si, subject in enumerate(subjects):
        color = _PALETTE[si % len(_PALETTE)]
        parts.append(f'<text x="{margin}" y="{16 + 16 * si}" fill="{color}">{subject}</text>')
        for p in series:
            if p.subject != subject:
                continue
            x, y = to_x(float(p.normalized_weight)), to_y(float(p.maturity))
            parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="5" fill="{color}"/>')
            parts.append(f'<text x="{x + 7:.1f}" y="{y - 6:.1f}" fill="{color}">'
                         f'{p.dimension}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


# --- document encoding -------------------------------------------------------

def series_point_to_doc(p: SeriesPoint) -> dict:
    return {
        "subject": p.subject,
        "dimension": p.dimension,
        "maturity": rational.to_wire(p.maturity),
        "normalized_weight": rational.to_wire(p.normalized_weight),
        "quadrant": p.quadrant.value,
    }


def quadrants_to_doc(q: QuadrantLabel) -> dict:
    return {
        "labels": {k: v.value for k, v in q.labels.items()},
        "weight_boundary": rational.to_wire(q.weight_boundary),
        "maturity_boundary": rational.to_wire(q.maturity_boundary),
    }


def comparison_to_doc(report: ComparisonReport) -> dict:
    from twingauge.scorer import score_report_to_doc

    return {
        "subjects": [
            {"id": aid, "report": score_report_to_doc(sr)} for aid, sr in report.subjects
        ],
        "series": [series_point_to_doc(p) for p in report.series],
        "ranking": list(report.ranking),
        "ties": [list(group) for group in report.ties],
        "weight_boundary": rational.to_wire(report.weight_boundary),
        "maturity_boundary": rational.to_wire(report.maturity_boundary),
    }


def what_if_to_doc(delta: WhatIfDelta) -> dict:
    from twingauge.scorer import score_report_to_doc

    return {
        "overrides": delta.overrides,
        "result": score_report_to_doc(delta.result),
        "delta_L": rational.to_wire(delta.delta_overall),
    }


def render_comparison(report: ComparisonReport, policy: RoundingPolicy) -> str:
    from twingauge.scorer import render_score

    by_id = dict(report.subjects)
    lines = ["Ranking by overall maturity:"]
    for pos, aid in enumerate(report.ranking, start=1):
        sr = by_id[aid]
        lines.append(f"  {pos}. {aid}: {render_score(sr.overall, policy)}")
    if report.ties:
        for group in report.ties:
            lines.append(f"  tie: {', '.join(group)}")
    return "\n".join(lines)
