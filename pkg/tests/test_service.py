"""HTTP API: endpoint contract, error mapping, exactness on the wire."""

import concurrent.futures
from datetime import datetime, timezone

import pytest
from fastapi.testclient import TestClient

from twingauge.fixtures import fixture
from twingauge.scorer import assessment_to_doc
from twingauge.service.app import create_app
from twingauge.store import Workspace


@pytest.fixture
def ws(tmp_path):
    tick = {"n": 0}

    def clock():
        tick["n"] += 1
        return datetime(2024, 3, 1, 12, 0, tick["n"] % 60, tzinfo=timezone.utc)

    return Workspace(tmp_path / "ws", clock=clock)


@pytest.fixture
def client(ws):
    with TestClient(create_app(ws)) as c:
        yield c


def create_doc(name: str) -> dict:
    doc = assessment_to_doc(fixture(name))
    doc.pop("id")
    return doc


def put(client, name: str) -> str:
    resp = client.post("/api/v1/assessments", json=create_doc(name))
    assert resp.status_code == 201, resp.text
    return resp.json()["id"]


def test_models_includes_builtin(client):
    resp = client.get("/api/v1/models")
    assert resp.status_code == 200
    assert {"id": "dt-core", "version": "1.0"} in resp.json()


def test_get_model_document(client):
    resp = client.get("/api/v1/models/dt-core/1.0")
    doc = resp.json()
    assert set(doc) == {"id", "version", "weight_scale", "gate_items", "dimensions"}
    assert len(doc["gate_items"]) == 6
    assert [d["key"] for d in doc["dimensions"]] == ["Cap", "Cor", "Com", "Lc"]


def test_unknown_model_404_vs_422(client):
    resp = client.get("/api/v1/models/ghost/9.9")
    assert resp.status_code == 422
    assert resp.json()["code"] == "UnknownModel"


def test_create_get_list_assessment(client):
    aid = put(client, "tesla")
    got = client.get(f"/api/v1/assessments/{aid}")
    assert got.status_code == 200
    assert got.json()["subject"]["name"] == "Tesla vehicle"
    listed = client.get("/api/v1/assessments", params={"subject": "Tesla vehicle"})
    assert [a["id"] for a in listed.json()] == [aid]


def test_get_missing_assessment_is_404(client):
    resp = client.get("/api/v1/assessments/01HZZZZZZZZZZZZZZZZZZZZZZZ")
    assert resp.status_code == 404
    assert resp.json()["code"] == "NotFound"


def test_score_endpoint_exact_values(client):
    aid = put(client, "google-map")
    resp = client.post(f"/api/v1/assessments/{aid}/score")
    assert resp.status_code == 200
    body = resp.json()
    assert body["overall"]["rational"] == "85/132"
    assert body["overall"]["decimal"] == "0.643939393939"
    assert body["overall"]["display"] == "0.64"
    by_key = {d["key"]: d for d in body["dimensions"]}
    assert by_key["Lc"]["maturity"]["rational"] == "1/1"
    assert by_key["Cap"]["weight_score"] == 5


def test_score_appends_history(client):
    aid = put(client, "tesla")
    client.post(f"/api/v1/assessments/{aid}/score")
    client.post(f"/api/v1/assessments/{aid}/score")
    resp = client.get(f"/api/v1/assessments/{aid}/history")
    entries = resp.json()
    assert len(entries) == 2
    assert all(e["overall"]["rational"] == "29/42" for e in entries)
    assert all("scored_at" in e for e in entries)
    assert entries[0]["scored_at"] <= entries[1]["scored_at"]


def test_score_refusal_is_409_with_verdict(client):
    aid = put(client, "living-heart")
    resp = client.post(f"/api/v1/assessments/{aid}/score")
    assert resp.status_code == 409
    body = resp.json()
    assert body["code"] == "GateRefusal"
    assert body["verdict"]["taxonomy"] == "DigitalModel"
    # refusal must not have written history
    assert client.get(f"/api/v1/assessments/{aid}/history").json() == []


def test_gate_endpoint(client):
    doc = create_doc("monitoring-shadow")
    resp = client.post("/api/v1/gate", json={"gate_answers": doc["gate_answers"]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is False
    assert body["taxonomy"] == "DigitalShadow"
    assert "influence_v2p" in body["report"]


def test_gate_incomplete_checklist_names_item(client):
    resp = client.post("/api/v1/gate", json={
        "gate_answers": {"answers": {"correspondence.isomorphism": True}},
    })
    assert resp.status_code == 422
    body = resp.json()
    assert body["code"] == "IncompleteChecklist"
    assert body["path"] == "correspondence.replicate"


def test_whatif_empty_overrides_is_zero(client):
    aid = put(client, "tesla")
    resp = client.post("/api/v1/whatif", json={"assessment_id": aid, "overrides": {}})
    assert resp.status_code == 200
    body = resp.json()
    assert body["delta_L"]["decimal"] == "0"
    assert body["result"]["overall"]["rational"] == "29/42"
    assert body["base_overall"] == body["result"]["overall"]


def test_whatif_level_bump_matches_hand_value(client):
    aid = put(client, "lu2020")
    resp = client.post("/api/v1/whatif", json={
        "assessment_id": aid,
        "overrides": {"levels": {"Lc": 2}},
    })
    body = resp.json()
    assert body["delta_L"]["rational"] == "4/45"


def test_whatif_never_persists(client):
    aid = put(client, "lu2020")
    client.post("/api/v1/whatif", json={
        "assessment_id": aid, "overrides": {"levels": {"Lc": 2}},
    })
    assert client.get(f"/api/v1/assessments/{aid}/history").json() == []
    assert client.get(f"/api/v1/assessments/{aid}").json()["levels"]["Lc"] == 1


def test_whatif_inline_assessment(client):
    resp = client.post("/api/v1/whatif", json={
        "assessment": create_doc("google-map"),
        "overrides": {"weight_scores": {"Cap": 3, "Cor": 3, "Com": 3, "Lc": 3}},
    })
    assert resp.json()["result"]["overall"]["rational"] == "11/16"


def test_whatif_identical_requests_identical_bodies(client):
    aid = put(client, "tesla")
    payload = {"assessment_id": aid, "overrides": {"levels": {"Lc": 3}}}
    with concurrent.futures.ThreadPoolExecutor(max_workers=2) as pool:
        futures = [pool.submit(client.post, "/api/v1/whatif", json=payload)
                   for _ in range(2)]
        bodies = [f.result().json() for f in futures]
    assert bodies[0] == bodies[1]


def test_whatif_out_of_range_is_422(client):
    aid = put(client, "tesla")
    resp = client.post("/api/v1/whatif", json={
        "assessment_id": aid, "overrides": {"levels": {"Cor": 9}},
    })
    assert resp.status_code == 422
    assert resp.json()["code"] == "DomainError"


def test_compare_endpoint(client):
    a1 = put(client, "google-map")
    a2 = put(client, "tesla")
    resp = client.get("/api/v1/compare", params={"ids": f"{a1},{a2}"})
    body = resp.json()
    assert body["ranking"] == [a2, a1]
    assert len(body["series"]) == 8
    assert body["weight_boundary"]["rational"] == "1/4"
    row = body["series"][0]
    assert set(row) == {"subject", "dimension", "maturity", "normalized_weight", "quadrant"}


def test_healthz_reports_model_count(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "models": 1}


def test_assessment_create_validates_payload(client):
    doc = create_doc("tesla")
    doc["model_ref"] = {"id": "ghost", "version": "1.0"}
    resp = client.post("/api/v1/assessments", json=doc)
    assert resp.status_code == 422
    assert resp.json()["code"] == "UnknownModel"


def test_create_assigns_server_timestamp_when_missing(client):
    doc = create_doc("tesla")
    doc.pop("timestamp")
    resp = client.post("/api/v1/assessments", json=doc)
    assert resp.status_code == 201
    assert resp.json()["timestamp"].startswith("2024-03-01T12:00:")


def test_serve_preflight_detects_busy_port(ws):
    import socket

    from twingauge.errors import BindError
    from twingauge.service.app import check_bindable

    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as holder:
        holder.bind(("127.0.0.1", 0))
        holder.listen(1)
        _, port = holder.getsockname()
        with pytest.raises(BindError):
            check_bindable("127.0.0.1", port)
    check_bindable("127.0.0.1", 0)  # ephemeral port is always bindable


def test_serve_requires_the_writer_lock(tmp_path):
    from twingauge.errors import LockHeld
    from twingauge.service.app import serve

    ws1 = Workspace(tmp_path / "ws")
    ws1.acquire_writer()
    try:
        with pytest.raises(LockHeld):
            serve(Workspace(tmp_path / "ws"), port=0)
    finally:
        ws1.release_writer()
