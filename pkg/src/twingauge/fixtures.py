"""Built-in case-study fixtures: four scored subjects, three gate studies,
and the eleven-row scientific corpus. All reference the built-in model and
carry fixed timestamps so every derived output is deterministic."""

from __future__ import annotations

from datetime import datetime, timezone

from twingauge.errors import NotFound
from twingauge.gatekeeper import GateChecklist
from twingauge.scorer import Assessment, ModelRef, Subject

_BUILTIN_REF = ModelRef(id="dt-core", version="1.0")

_ALL_YES = {
    "correspondence.isomorphism": True,
    "correspondence.replicate": True,
    "correspondence.scope_scale_declared": True,
    "correspondence.completeness": True,
    "connection.continuity_p2v": True,
    "connection.influence_v2p": True,
}


def _ts(day: int) -> datetime:
    return datetime(2024, 1, day, 12, 0, 0, tzinfo=timezone.utc)


def _assessment(
    name: str,
    description: str,
    levels: dict[str, int],
    weights: dict[str, int],
    answers: dict[str, bool],
    day: int,
    notes: dict[str, str] | None = None,
) -> Assessment:
    return Assessment(
        subject=Subject(name=name, description=description),
        model_ref=_BUILTIN_REF,
        gate_answers=GateChecklist(answers=dict(answers), notes=dict(notes or {})),
        levels=dict(levels),
        weight_scores=dict(weights),
        rater="case-study",
        timestamp=_ts(day),
    )


def google_map() -> Assessment:
    return _assessment(
        "Google Map Navigation",
        "Live traffic replica guiding drivers; route data up, guidance back down.",
        levels={"Cap": 3, "Cor": 1, "Com": 2, "Lc": 3},
        weights={"Cap": 5, "Cor": 3, "Com": 2, "Lc": 1},
        answers=_ALL_YES,
        day=1,
    )


def tesla() -> Assessment:
    return _assessment(
        "Tesla vehicle",
        "Engine and mechanical systems twin; sensor data up, over-the-air fixes down.",
        levels={"Cap": 3, "Cor": 2, "Com": 2, "Lc": 2},
        weights={"Cap": 4, "Cor": 3, "Com": 4, "Lc": 3},
        answers=_ALL_YES,
        day=2,
    )


def lu2020() -> Assessment:
    return _assessment(
        "lu2020",
        "Asset management of centrifugal pumps in heating, ventilation and air-cooling.",
        levels={"Cap": 2, "Cor": 1, "Com": 2, "Lc": 1},
        weights={"Cap": 5, "Cor": 2, "Com": 4, "Lc": 4},
        answers=_ALL_YES,
        day=3,
    )


def liu2021() -> Assessment:
    return _assessment(
        "liu2021",
        "Hollow glass processing line twin.",
        levels={"Cap": 3, "Cor": 2, "Com": 2, "Lc": 2},
        weights={"Cap": 4, "Cor": 2, "Com": 3, "Lc": 1},
        answers=_ALL_YES,
        day=4,
    )


def living_heart() -> Assessment:
    # Simulation-focused heart model: corresponds within its scope, but no
    # continuous link to a physical heart in either direction.
    return _assessment(
        "Living Heart",
        "Finite-element heart model for electro-mechanical simulation studies.",
        levels={"Cap": 3, "Cor": 1, "Com": 2, "Lc": 1},
        weights={"Cap": 3, "Cor": 3, "Com": 3, "Lc": 3},
        answers={
            **_ALL_YES,
            "connection.continuity_p2v": False,
            "connection.influence_v2p": False,
        },
        day=5,
        notes={
            "connection.continuity_p2v": "No continuous update from a physical heart.",
            "connection.influence_v2p": "Simulation results do not act on a physical heart.",
        },
    )


def emma_twin() -> Assessment:
    # Virtual body built once from one person's medical data; correspondence
    # is assumed to hold, but no connection persists after construction.
    return _assessment(
        "Emma Twin",
        "3D-modeled human body used to test treatments virtually.",
        levels={"Cap": 3, "Cor": 1, "Com": 3, "Lc": 1},
        weights={"Cap": 3, "Cor": 3, "Com": 3, "Lc": 3},
        answers={
            **_ALL_YES,
            "connection.continuity_p2v": False,
            "connection.influence_v2p": False,
        },
        day=6,
        notes={
            "correspondence.completeness": "Assumed true to advance the analysis.",
            "connection.continuity_p2v": "No connection once the virtual body is built.",
        },
    )


def monitoring_shadow() -> Assessment:
    # Pure monitoring: continuous data collection, no influence back.
    return _assessment(
        "Monitoring-only subject",
        "Continuous condition monitoring with no virtual-to-physical influence.",
        levels={"Cap": 1, "Cor": 1, "Com": 1, "Lc": 1},
        weights={"Cap": 3, "Cor": 3, "Com": 3, "Lc": 3},
        answers={**_ALL_YES, "connection.influence_v2p": False},
        day=7,
    )


FIXTURES = {
    "google-map": google_map,
    "tesla": tesla,
    "lu2020": lu2020,
    "liu2021": liu2021,
    "living-heart": living_heart,
    "emma-twin": emma_twin,
    "monitoring-shadow": monitoring_shadow,
}


def fixture(name: str) -> Assessment:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise NotFound(
            f"no fixture '{name}'; available: {', '.join(sorted(FIXTURES))}"
        ) from None


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


# Eleven scientific cases: (name, domain, Cap, Cor, Com, Lc). Weight scores
# are published only for lu2020 and liu2021; the rest default to Medium (3).
_CORPUS_ROWS = (
    ("tao2018", "Maintenance: PHM for a wind turbine gearbox", 3, 1, 1, 1),
    ("liu2019-health", "Health: elder personal health management", 4, 1, 1, 1),
    ("liu2019-afms", "Manufacturing: automated flow-shop for sheet material", 2, 2, 1, 1),
    ("ivanov2020", "Logistics: global lighting-equipment supply chain", 2, 2, 1, 1),
    ("lu2020", "Management: centrifugal pump asset management", 2, 1, 2, 1),
    ("luo2020", "Maintenance: cutting-tool life in CNC machining", 3, 1, 2, 1),
    ("dembski2020", "Smart city: urban traffic management", 3, 2, 2, 1),
    ("aheleroff2021", "Maintenance: constructed-wetland maintenance schedule", 3, 1, 2, 1),
    ("liu2021", "Manufacturing: hollow glass processing", 3, 2, 2, 2),
    ("alves2019", "Agriculture: sensing and precision irrigation", 3, 1, 2, 2),
    ("zhang2021", "Management: hydraulic valve job-shop availability", 3, 2, 2, 1),
)


def scientific_corpus() -> list[Assessment]:
    """The eleven-case corpus as assessments against the built-in model."""
    special = {"lu2020": lu2020, "liu2021": liu2021}
    out = []
    for i, (name, domain, cap, cor, com, lc) in enumerate(_CORPUS_ROWS):
        if name in special:
            out.append(special[name]())
            continue
        out.append(
            _assessment(
                name,
                domain,
                levels={"Cap": cap, "Cor": cor, "Com": com, "Lc": lc},
                weights={"Cap": 3, "Cor": 3, "Com": 3, "Lc": 3},
                answers=_ALL_YES,
                day=10 + i,
            )
        )
    return out
