"""HTTP facade over a workspace: models, assessments, scoring, analysis.

All endpoints live under /api/v1. Handlers are stateless over the store;
what-if is a pure POST that never persists, while POST .../score records a
history entry. Every domain error maps to exactly one (status, code) pair.
"""

from __future__ import annotations

import socket
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from twingauge import analysis, errors, rational
from twingauge.gatekeeper import checklist_from_doc, evaluate_gates, gate_report, verdict_to_doc
from twingauge.schema import model_to_doc
from twingauge.scorer import (
    Assessment,
    ModelRef,
    Subject,
    assessment_to_doc,
    score_assessment,
    score_report_to_doc,
    timestamp_from_doc,
    timestamp_to_doc,
)
from twingauge.service import schemas
from twingauge.store import Workspace

# The contract: one (status, code) pair per domain error.
ERROR_TABLE: dict[type[errors.TwinGaugeError], tuple[int, str]] = {
    errors.ParseError: (400, "ParseError"),
    errors.NotFound: (404, "NotFound"),
    errors.GateRefusal: (409, "GateRefusal"),
    errors.DomainError: (422, "DomainError"),
    errors.ValidationError: (422, "ValidationError"),
    errors.IncompleteChecklist: (422, "IncompleteChecklist"),
    errors.UnknownModel: (422, "UnknownModel"),
    errors.ModelMismatch: (422, "ModelMismatch"),
    errors.StorageError: (500, "StorageError"),
    errors.ConsistencyError: (500, "ConsistencyError"),
    errors.LockHeld: (503, "LockHeld"),
}


def _error_response(exc: errors.TwinGaugeError) -> JSONResponse:
    status, code = 500, "InternalError"
    for cls, pair in ERROR_TABLE.items():
        if type(exc) is cls:
            status, code = pair
            break
    body: dict = {"code": code, "message": str(exc), "path": None}
    if isinstance(exc, errors.IncompleteChecklist):
        body["path"] = exc.item_id
    if isinstance(exc, errors.ValidationError) and exc.violations:
        body["path"] = exc.violations[0].path
    if isinstance(exc, errors.GateRefusal):
        body["verdict"] = verdict_to_doc(exc.verdict)
    return JSONResponse(status_code=status, content=body)


def create_app(workspace: Workspace, static_dir: Path | None = None) -> FastAPI:
    ws = workspace

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        ws.release_writer()  # flushes are synchronous; just drop the lock

    app = FastAPI(title="twingauge", version="0.1.0", lifespan=lifespan)

    @app.exception_handler(errors.TwinGaugeError)
    async def _domain_error(request: Request, exc: errors.TwinGaugeError):
        return _error_response(exc)

    def resolve_model(model_id: str, version: str):
        return ws.get_model(model_id, version)

    def assessment_from_create(payload: schemas.AssessmentCreate) -> Assessment:
        ts = (timestamp_from_doc(payload.timestamp) if payload.timestamp
              else ws.clock())
        return Assessment(
            subject=Subject(payload.subject.name, payload.subject.description),
            model_ref=ModelRef(payload.model_ref.id, payload.model_ref.version),
            gate_answers=checklist_from_doc(payload.gate_answers.model_dump()),
            levels=dict(payload.levels),
            weight_scores=dict(payload.weight_scores),
            rater=payload.rater,
            timestamp=ts,
        )

    # --- models ---------------------------------------------------------------

    @app.get("/api/v1/models", response_model=list[schemas.ModelSummary])
    def list_models():
        return [{"id": mid, "version": ver} for mid, ver in ws.list_models()]

    @app.get("/api/v1/models/{model_id}/{version}")
    def get_model(model_id: str, version: str):
        return model_to_doc(resolve_model(model_id, version))

    # --- assessments -----------------------------------------------------------

    @app.post("/api/v1/assessments", response_model=schemas.AssessmentDoc, status_code=201)
    def create_assessment(payload: schemas.AssessmentCreate):
        a = assessment_from_create(payload)
        aid = ws.put_assessment(a)
        return assessment_to_doc(ws.get_assessment(aid))

    @app.get("/api/v1/assessments", response_model=list[schemas.AssessmentDoc])
    def list_assessments(
        model: str | None = None,
        subject: str | None = None,
        rater: str | None = None,
    ):
        return [assessment_to_doc(a)
                for a in ws.list_assessments(model_id=model, subject=subject, rater=rater)]

    @app.get("/api/v1/assessments/{assessment_id}", response_model=schemas.AssessmentDoc)
    def get_assessment(assessment_id: str):
        return assessment_to_doc(ws.get_assessment(assessment_id))

    @app.post("/api/v1/assessments/{assessment_id}/score",
              response_model=schemas.ScoreResponse)
    def score(assessment_id: str):
        a = ws.get_assessment(assessment_id)
        model = resolve_model(a.model_ref.id, a.model_ref.version)
        report = score_assessment(a, model)
        ws.append_history(assessment_id, report)
        return score_report_to_doc(report)

    @app.get("/api/v1/assessments/{assessment_id}/history",
             response_model=list[schemas.HistoryEntry])
    def history(assessment_id: str):
        return [
            {**score_report_to_doc(report), "scored_at": timestamp_to_doc(ts)}
            for ts, report in ws.read_history(assessment_id)
        ]

    # --- evaluation -----------------------------------------------------------

    @app.post("/api/v1/gate", response_model=schemas.GateVerdictPayload)
    def gate(payload: schemas.GateRequest):
        ref = payload.model_ref or schemas.ModelRefPayload(id="dt-core", version="1.0")
        model = resolve_model(ref.id, ref.version)
        checklist = checklist_from_doc(payload.gate_answers.model_dump())
        verdict = evaluate_gates(checklist, model)
        doc = verdict_to_doc(verdict)
        doc["report"] = gate_report(verdict, checklist, model)
        return doc

    @app.post("/api/v1/whatif", response_model=schemas.WhatIfResponse)
    def whatif(payload: schemas.WhatIfRequest):
        if payload.assessment_id is not None:
            base = ws.get_assessment(payload.assessment_id)
        elif payload.assessment is not None:
            base = assessment_from_create(payload.assessment)
        else:
            raise errors.DomainError("whatif needs assessment_id or an inline assessment")
        model = resolve_model(base.model_ref.id, base.model_ref.version)
        delta = analysis.what_if(base, payload.overrides.model_dump(), model)
        doc = analysis.what_if_to_doc(delta)
        doc["base_overall"] = rational.to_wire(delta.result.overall - delta.delta_overall)
        return doc

    @app.get("/api/v1/compare", response_model=schemas.CompareResponse)
    def compare_assessments(ids: str = Query(...)):
        wanted = [i for i in ids.split(",") if i]
        if not wanted:
            raise errors.DomainError("compare needs at least one assessment id")
        portfolio = []
        for aid in wanted:
            a = ws.get_assessment(aid)
            model = resolve_model(a.model_ref.id, a.model_ref.version)
            portfolio.append((a, score_assessment(a, model)))
        return analysis.comparison_to_doc(analysis.compare(portfolio))

    @app.get("/healthz", response_model=schemas.HealthPayload)
    def healthz():
        return {"status": "ok", "models": len(ws.list_models())}

    if static_dir is not None and static_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def check_bindable(host: str, port: int) -> None:
    """Fail fast with BindError when the listen address is unavailable."""
    try:
        with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as sock:
            sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
            sock.bind((host, port))
    except OSError as exc:
        raise errors.BindError(f"cannot bind {host}:{port}: {exc}") from exc


def serve(
    workspace: Workspace,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: Path | None = None,
) -> None:
    """Run the service until interrupted; holds the workspace writer lock."""
    import uvicorn

    workspace.acquire_writer()
    try:
        check_bindable(host, port)
        app = create_app(workspace, static_dir=static_dir)
        uvicorn.run(app, host=host, port=port, log_level="info")
    finally:
        workspace.release_writer()
