"""Phase 1: fundamental-condition gates and the model/shadow/twin taxonomy.

Two conditions gate every subject: correspondence (the virtual replica is a
complete, isomorphic representation within declared scope and scale) and
bidirectional connection (continuous physical-to-virtual updates plus some
virtual-to-physical influence). A subject passes only if every checklist
answer is yes; failures classify it as a digital model or digital shadow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from twingauge.errors import ConsistencyError, DomainError, IncompleteChecklist
from twingauge.schema import (
    GATE_CONTINUITY_P2V,
    GATE_INFLUENCE_V2P,
    GateCondition,
    MaturityModel,
)


class Taxonomy(str, Enum):
    DIGITAL_MODEL = "DigitalModel"
    DIGITAL_SHADOW = "DigitalShadow"
    DIGITAL_TWIN_CANDIDATE = "DigitalTwinCandidate"

    @property
    def display_name(self) -> str:
        return {
            Taxonomy.DIGITAL_MODEL: "Digital Model",
            Taxonomy.DIGITAL_SHADOW: "Digital Shadow",
            Taxonomy.DIGITAL_TWIN_CANDIDATE: "Digital Twin candidate",
        }[self]


# Ordering used by the monotonicity property: model < shadow < candidate.
TAXONOMY_ORDER = (
    Taxonomy.DIGITAL_MODEL,
    Taxonomy.DIGITAL_SHADOW,
    Taxonomy.DIGITAL_TWIN_CANDIDATE,
)


@dataclass(frozen=True)
class GateChecklist:
    """Boolean answers to every gate item, with optional per-item notes."""

    answers: dict[str, bool]
    notes: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class GateVerdict:
    passed: bool
    taxonomy: Taxonomy
    failed_items: tuple[str, ...]


def classify(correspondence_ok: bool, continuity_p2v: bool, influence_v2p: bool) -> Taxonomy:
    """Taxonomy decision table over the three condition outcomes.

    No continuous update means a static model or isolated simulation; a
    non-corresponding replica is never more than a digital model either, so
    the shadow label requires correspondence plus one-way continuity.
    """
    if not continuity_p2v:
        return Taxonomy.DIGITAL_MODEL
    if not correspondence_ok:
        return Taxonomy.DIGITAL_MODEL
    if not influence_v2p:
        return Taxonomy.DIGITAL_SHADOW
    return Taxonomy.DIGITAL_TWIN_CANDIDATE


def evaluate_gates(checklist: GateChecklist, model: MaturityModel) -> GateVerdict:
    """Evaluate phase 1 for one subject.

    Passes only when every item of the model's checklist is answered yes.
    Raises IncompleteChecklist for a missing answer and DomainError for an
    answer keyed to no item in the model.
    """
    spec_ids = {item.id for item in model.gate_checklist_spec}
    for answered in checklist.answers:
        if answered not in spec_ids:
            raise DomainError(f"answer for unknown gate item '{answered}'")

    failed: list[str] = []
    correspondence_ok = True
    for item in model.gate_checklist_spec:
        if item.id not in checklist.answers:
            raise IncompleteChecklist(item.id)
        if not checklist.answers[item.id]:
            failed.append(item.id)
            if item.condition is GateCondition.CORRESPONDENCE:
                correspondence_ok = False

    taxonomy = classify(
        correspondence_ok=correspondence_ok,
        continuity_p2v=checklist.answers[GATE_CONTINUITY_P2V],
        influence_v2p=checklist.answers[GATE_INFLUENCE_V2P],
    )
    return GateVerdict(passed=not failed, taxonomy=taxonomy, failed_items=tuple(failed))


def gate_report(verdict: GateVerdict, checklist: GateChecklist, model: MaturityModel) -> str:
    """Human-readable phase-1 summary, items in checklist-spec order."""
    if verdict.passed != (not verdict.failed_items):
        raise ConsistencyError("verdict passed flag disagrees with its failed_items")
    if verdict.passed != (verdict.taxonomy is Taxonomy.DIGITAL_TWIN_CANDIDATE):
        raise ConsistencyError("verdict passed flag disagrees with its taxonomy")

    lines = [
        f"Fundamental conditions: {'PASSED' if verdict.passed else 'FAILED'}",
        f"Classification: {verdict.taxonomy.display_name}",
    ]
    if verdict.failed_items:
        lines.append(f"Failed items ({len(verdict.failed_items)}):")
        for item in model.gate_checklist_spec:
            if item.id not in verdict.failed_items:
                continue
            line = f"  - {item.id} [{item.condition.value}]: {item.prompt}"
            note = checklist.notes.get(item.id)
            if note:
                line += f" -- {note}"
            lines.append(line)
    else:
        lines.append("Failed items: none")
    return "\n".join(lines)


def checklist_to_doc(checklist: GateChecklist) -> dict:
    doc: dict = {"answers": dict(checklist.answers)}
    if checklist.notes:
        doc["notes"] = dict(checklist.notes)
    return doc


def checklist_from_doc(doc: dict) -> GateChecklist:
    return GateChecklist(
        answers={str(k): bool(v) for k, v in doc.get("answers", {}).items()},
        notes={str(k): str(v) for k, v in doc.get("notes", {}).items()},
    )


def verdict_to_doc(verdict: GateVerdict) -> dict:
    return {
        "passed": verdict.passed,
        "taxonomy": verdict.taxonomy.value,
        "failed_items": list(verdict.failed_items),
    }
