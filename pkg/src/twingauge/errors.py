"""Domain error hierarchy shared by every layer (library, store, CLI, service)."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from twingauge.gatekeeper import GateVerdict


class TwinGaugeError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(TwinGaugeError):
    """Malformed document; carries a human-readable position when known."""

    def __init__(self, message: str, position: str | None = None):
        self.position = position
        super().__init__(message if position is None else f"{message} (at {position})")


class ValidationError(TwinGaugeError):
    """Well-formed document that violates a model invariant.

    Carries the Violation records so callers can name the broken rules.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        rules = ", ".join(v.rule for v in self.violations)
        super().__init__(f"model validation failed: {rules}")


class DomainError(TwinGaugeError):
    """Input outside an operation's stated domain (range, key set, scale)."""


class IncompleteChecklist(TwinGaugeError):
    """Gate checklist missing an answer for a required item."""

    def __init__(self, item_id: str):
        self.item_id = item_id
        super().__init__(f"no answer for gate item '{item_id}'")


class ConsistencyError(TwinGaugeError):
    """Internal invariant breach; indicates a defect, not bad input."""


class GateRefusal(TwinGaugeError):
    """Subject failed phase 1; scoring is refused. Carries the verdict."""

    def __init__(self, verdict: "GateVerdict"):
        self.verdict = verdict
        failed = ", ".join(verdict.failed_items)
        super().__init__(
            f"subject failed fundamental conditions ({verdict.taxonomy.value}): {failed}"
        )


class UnknownModel(TwinGaugeError):
    """Referenced model id+version does not resolve in the workspace."""


class NotFound(TwinGaugeError):
    """Requested stored document does not exist."""


class ModelMismatch(TwinGaugeError):
    """Operation requires all inputs to reference one model id+version."""


class StorageError(TwinGaugeError):
    """I/O failure; the workspace is left in its prior readable state."""


class LockHeld(TwinGaugeError):
    """Another writer holds the workspace lock."""


class BindError(TwinGaugeError):
    """Service could not bind its listen address."""
