"""File-backed workspace: models, assessments, append-only score history.

One JSON document per assessment in a flat directory, one JSONL history log
per assessment, models materialized as definition files. Writes are atomic
(temp file + rename) or single-line appends; a single writer is enforced per
workspace through an advisory lock file, readers need no lock.
"""

from __future__ import annotations

import fcntl
import json
import os
import secrets
import threading
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterator

from twingauge.errors import LockHeld, NotFound, StorageError, UnknownModel
from twingauge.schema import MaturityModel, builtin_model, model_from_doc, model_to_doc
from twingauge.scorer import (
    Assessment,
    ScoreReport,
    assessment_from_doc,
    assessment_to_doc,
    score_report_from_doc,
    score_report_to_doc,
    timestamp_from_doc,
    with_id,
)

Clock = Callable[[], datetime]

_CROCKFORD = "0123456789ABCDEFGHJKMNPQRSTVWXYZ"


class UlidGenerator:
    """Monotonic ULIDs: 48-bit millisecond timestamp + 80 random bits.

    Within one millisecond the random part increments, so ids created by one
    generator sort lexicographically in creation order.
    """

    def __init__(self, clock: Clock | None = None):
        self._clock = clock or (lambda: datetime.now(timezone.utc))
        self._lock = threading.Lock()
        self._last_ms = -1
        self._last_rand = 0

    def new(self) -> str:
        with self._lock:
            ms = int(self._clock().timestamp() * 1000)
            if ms <= self._last_ms:
                ms = self._last_ms
                self._last_rand += 1
                if self._last_rand >= 1 << 80:  # carry into the time part
                    ms += 1
                    self._last_rand = secrets.randbits(80)
            else:
                self._last_rand = secrets.randbits(80)
            self._last_ms = ms
            value = (ms << 80) | self._last_rand
            chars = []
            for shift in range(125, -1, -5):
                chars.append(_CROCKFORD[(value >> shift) & 0x1F])
            return "".join(chars)


class Workspace:
    """A local directory holding models, assessments and score history."""

    def __init__(self, root: str | Path, clock: Clock | None = None):
        self.root = Path(root)
        self.clock = clock or (lambda: datetime.now(timezone.utc))
        self._ulids = UlidGenerator(self.clock)
        self._write_mutex = threading.Lock()
        self._lock_fd: int | None = None
        try:
            for sub in ("models", "assessments", "history"):
                (self.root / sub).mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageError(f"cannot initialize workspace at {self.root}: {exc}") from exc
        builtin = builtin_model()
        if not self._model_path(builtin.id, builtin.version).exists():
            self.register_model(builtin)

    # --- locking -------------------------------------------------------------

    @property
    def _lock_path(self) -> Path:
        return self.root / ".lock"

    def acquire_writer(self) -> None:
        """Take the workspace-wide writer lock for this process's lifetime."""
        if self._lock_fd is not None:
            return
        fd = os.open(self._lock_path, os.O_RDWR | os.O_CREAT, 0o644)
        try:
            fcntl.flock(fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except OSError:
            os.close(fd)
            raise LockHeld(f"another writer holds {self._lock_path}") from None
        self._lock_fd = fd

    def release_writer(self) -> None:
        if self._lock_fd is None:
            return
        fcntl.flock(self._lock_fd, fcntl.LOCK_UN)
        os.close(self._lock_fd)
        self._lock_fd = None

    @contextmanager
    def _writing(self) -> Iterator[None]:
        # Long-lived holders (the service) keep the flock; one-shot writers
        # take and release it around the operation. The thread mutex
        # serializes writers inside one process either way.
        with self._write_mutex:
            if self._lock_fd is not None:
                yield
                return
            self.acquire_writer()
            try:
                yield
            finally:
                self.release_writer()

    # --- models ----------------------------------------------------------------

    def _model_path(self, model_id: str, version: str) -> Path:
        return self.root / "models" / f"{model_id}@{version}.json"

    def register_model(self, model: MaturityModel) -> None:
        with self._writing():
            _atomic_write_json(self._model_path(model.id, model.version), model_to_doc(model))

    def get_model(self, model_id: str, version: str) -> MaturityModel:
        path = self._model_path(model_id, version)
        if not path.exists():
            raise UnknownModel(f"no model {model_id}@{version} in workspace")
        return model_from_doc(_read_json(path))

    def list_models(self) -> list[tuple[str, str]]:
        out = []
        for path in sorted((self.root / "models").glob("*.json")):
            model_id, _, version = path.stem.partition("@")
            out.append((model_id, version))
        return out

    # --- assessments -------------------------------------------------------------

    def _assessment_path(self, assessment_id: str) -> Path:
        return self.root / "assessments" / f"{assessment_id}.json"

    def put_assessment(self, a: Assessment) -> str:
        """Store a new assessment; returns its time-sortable id."""
        if not self._model_path(a.model_ref.id, a.model_ref.version).exists():
            raise UnknownModel(
                f"assessment references unknown model "
                f"{a.model_ref.id}@{a.model_ref.version}"
            )
        new_id = a.id or self._ulids.new()
        stored = with_id(a, new_id)
        with self._writing():
            _atomic_write_json(self._assessment_path(new_id), assessment_to_doc(stored))
        return new_id

    def get_assessment(self, assessment_id: str) -> Assessment:
        path = self._assessment_path(assessment_id)
        if not path.exists():
            raise NotFound(f"no assessment '{assessment_id}'")
        return assessment_from_doc(_read_json(path))

    def list_assessments(
        self,
        model_id: str | None = None,
        subject: str | None = None,
        rater: str | None = None,
    ) -> list[Assessment]:
        """All assessments in id (creation) order; filters are conjunctive."""
        out = []
        for path in sorted((self.root / "assessments").glob("*.json")):
            a = assessment_from_doc(_read_json(path))
            if model_id is not None and a.model_ref.id != model_id:
                continue
            if subject is not None and a.subject.name != subject:
                continue
            if rater is not None and a.rater != rater:
                continue
            out.append(a)
        return out

    # --- history --------------------------------------------------------------

    def _history_path(self, assessment_id: str) -> Path:
        return self.root / "history" / f"{assessment_id}.jsonl"

    def append_history(self, assessment_id: str, report: ScoreReport) -> None:
        """Append one score report to the assessment's log; never mutates."""
        if not self._assessment_path(assessment_id).exists():
            raise NotFound(f"no assessment '{assessment_id}'")
        line = json.dumps(score_report_to_doc(report, scored_at=self.clock()))
        with self._writing():
            try:
                with open(self._history_path(assessment_id), "a", encoding="utf-8") as fh:
                    fh.write(line + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StorageError(f"history append failed: {exc}") from exc

    def read_history(self, assessment_id: str) -> list[tuple[datetime, ScoreReport]]:
        """All appended reports in append order, with their scored_at stamps.

        A torn final line (interrupted append) is skipped; a malformed line
        anywhere else means corruption and raises StorageError.
        """
        if not self._assessment_path(assessment_id).exists():
            raise NotFound(f"no assessment '{assessment_id}'")
        path = self._history_path(assessment_id)
        if not path.exists():
            return []
        out: list[tuple[datetime, ScoreReport]] = []
        lines = path.read_text(encoding="utf-8").splitlines()
        for i, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
                out.append((timestamp_from_doc(doc["scored_at"]), score_report_from_doc(doc)))
            except (ValueError, KeyError) as exc:
                if i == len(lines) - 1:
                    break  # torn append; prior state stays readable
                raise StorageError(f"corrupt history line {i + 1} for {assessment_id}") from exc
        return out


def _atomic_write_json(path: Path, doc: dict) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    try:
        tmp.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        tmp.unlink(missing_ok=True)
        raise StorageError(f"write to {path} failed: {exc}") from exc


def _read_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise StorageError(f"read of {path} failed: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StorageError(f"corrupt document {path}: {exc.msg}") from exc
