"""Command-line entry point.

Subcommands mirror the three evaluation phases plus persistence and the
service: model-validate, gate, assess, score, compare, report, serve.
Exit codes: 0 success, 1 domain failure (gate refusal, validation), 2 usage.
Machine formats (--format json|csv) never mix prose into the data stream.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, TextIO

from twingauge import analysis, errors
from twingauge.fixtures import fixture, fixture_names
from twingauge.gatekeeper import GateChecklist, evaluate_gates, gate_report, verdict_to_doc
from twingauge.rational import decimal_string, display_2dp, rational_string
from twingauge.schema import (
    WEIGHT_SCORE_LABELS,
    MaturityModel,
    builtin_model,
    model_from_doc,
    validate_model,
)
from twingauge.scorer import (
    Assessment,
    ModelRef,
    RoundingPolicy,
    ScoreReport,
    Subject,
    score_assessment,
    score_report_to_doc,
)
from twingauge.store import Workspace

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad flag combination; exits 2 like any other usage problem."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twingauge",
        description="Digital-twin maturity assessment: gate checks, level "
                    "classification, weighted scoring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("human", "json")) -> None:
        p.add_argument("--workspace", metavar="DIR", help="workspace directory")
        p.add_argument("--format", choices=formats, default="human")
        p.add_argument("--exact", action="store_true",
                       help="print exact rationals alongside decimals")

    p = sub.add_parser("model-validate", help="check a model definition file")
    p.add_argument("model", help="path to a model file, or 'builtin'")
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("gate", help="evaluate the fundamental conditions")
    common(p)
    p.add_argument("--fixture", choices=fixture_names())
    p.add_argument("--assessment", metavar="ID")

    p = sub.add_parser("score", help="score an assessment")
    common(p)
    p.add_argument("--fixture", choices=fixture_names())
    p.add_argument("--assessment", metavar="ID")

    p = sub.add_parser("compare", help="rank several subjects")
    common(p, formats=("human", "json", "csv"))
    p.add_argument("--fixture", action="append", default=[], choices=fixture_names())
    p.add_argument("ids", nargs="*", help="assessment ids from the workspace")

    p = sub.add_parser("report", help="write CSV and SVG gap-analysis artifacts")
    common(p)
    p.add_argument("--fixture", action="append", default=[], choices=fixture_names())
    p.add_argument("ids", nargs="*", help="assessment ids from the workspace")
    p.add_argument("--out", metavar="PATH", required=True, help="output directory")

    p = sub.add_parser("assess", help="create and store an assessment")
    common(p)
    p.add_argument("--model", default="builtin",
                   help="'builtin', 'id@version', or a model file path")
    p.add_argument("--subject", help="subject name")
    p.add_argument("--description")
    p.add_argument("--rater")
    p.add_argument("--levels", metavar="K=N,...", help="e.g. Cap=3,Cor=2,Com=2,Lc=2")
    p.add_argument("--weights", metavar="K=W,...", help="e.g. Cap=4,Cor=3,Com=4,Lc=3")
    p.add_argument("--answers", metavar="ITEM=yes|no,...",
                   help="gate answers; omit to be prompted")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--workspace", metavar="DIR", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", metavar="DIR",
                   help="directory with a built UI bundle to host at /")

    return parser


def main(argv: list[str] | None = None) -> int:
    return run(argv if argv is not None else sys.argv[1:])


def run(
    argv: list[str],
    *,
    clock: Callable[[], datetime] | None = None,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
    stdin: TextIO = sys.stdin,
) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    handlers = {
        "model-validate": cmd_model_validate,
        "gate": cmd_gate,
        "score": cmd_score,
        "compare": cmd_compare,
        "report": cmd_report,
        "assess": cmd_assess,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args, clock=clock, out=out, err=err, stdin=stdin)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except errors.TwinGaugeError as exc:
        _emit_error(exc, args, err)
        return EXIT_DOMAIN


def _emit_error(exc: errors.TwinGaugeError, args, err: TextIO) -> None:
    body = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, errors.GateRefusal):
        body["verdict"] = verdict_to_doc(exc.verdict)
    if getattr(args, "format", "human") == "json":
        print(json.dumps(body), file=err)
    else:
        print(f"error [{body['error']}]: {body['message']}", file=err)


def _open_workspace(args, clock) -> Workspace:
    if not args.workspace:
        raise UsageError("this command needs --workspace")
    return Workspace(args.workspace, clock=clock)


def _load_model_arg(source: str, ws: Workspace | None) -> MaturityModel:
    if source == "builtin":
        return builtin_model()
    if "@" in source and ws is not None and not Path(source).exists():
        model_id, _, version = source.partition("@")
        return ws.get_model(model_id, version)
    from twingauge.schema import load_model

    path = Path(source)
    if not path.exists():
        raise errors.NotFound(f"no model file '{source}'")
    return load_model(path.read_text(encoding="utf-8"))


def _resolve_subjects(args, clock) -> list[Assessment]:
    """Fixtures and/or stored assessments named on the command line."""
    subjects = [fixture(name) for name in args.fixture]
    if args.ids:
        ws = _open_workspace(args, clock)
        subjects.extend(ws.get_assessment(aid) for aid in args.ids)
    if not subjects:
        raise UsageError("name at least one --fixture or assessment id")
    return subjects


def _resolve_single(args, clock) -> tuple[Assessment, MaturityModel, Workspace | None]:
    if getattr(args, "fixture", None) and getattr(args, "assessment", None):
        raise UsageError("use either --fixture or --assessment, not both")
    if getattr(args, "fixture", None):
        return fixture(args.fixture), builtin_model(), None
    if getattr(args, "assessment", None):
        ws = _open_workspace(args, clock)
        a = ws.get_assessment(args.assessment)
        return a, ws.get_model(a.model_ref.id, a.model_ref.version), ws
    raise UsageError("name a subject with --fixture or --assessment")


# --- subcommands ---------------------------------------------------------------


def cmd_model_validate(args, *, clock, out, err, stdin) -> int:
    if args.model == "builtin":
        model = builtin_model()
    else:
        path = Path(args.model)
        if not path.exists():
            raise errors.NotFound(f"no model file '{args.model}'")
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise errors.ParseError(f"invalid JSON: {exc.msg}",
                                    position=f"line {exc.lineno}") from exc
        model = model_from_doc(doc)
    violations = validate_model(model)
    if args.format == "json":
        print(json.dumps({
            "model": {"id": model.id, "version": model.version},
            "violations": [
                {"rule": v.rule, "path": v.path, "message": v.message}
                for v in violations
            ],
        }), file=out)
    else:
        print(f"{model.id}@{model.version}: {len(violations)} violations", file=out)
        for v in violations:
            print(f"  - [{v.rule}] {v.path}: {v.message}", file=out)
    return EXIT_OK if not violations else EXIT_DOMAIN


def cmd_gate(args, *, clock, out, err, stdin) -> int:
    a, model, _ = _resolve_single(args, clock)
    verdict = evaluate_gates(a.gate_answers, model)
    if args.format == "json":
        print(json.dumps(verdict_to_doc(verdict)), file=out)
    else:
        print(f"Subject: {a.subject.name}", file=out)
        print(gate_report(verdict, a.gate_answers, model), file=out)
    return EXIT_OK if verdict.passed else EXIT_DOMAIN


def _print_human_report(a: Assessment, report: ScoreReport, exact: bool, out) -> None:
    def fmt(x) -> str:
        if exact:
            return f"{rational_string(x)} = {decimal_string(x)}"
        return display_2dp(x)

    print(f"Subject: {a.subject.name}", file=out)
    print(f"Model: {report.model_ref.id}@{report.model_ref.version}", file=out)
    print(f"{'dim':<5} {'level':>5} {'maturity':>20} {'w':>3} {'weight':>20}", file=out)
    for d in report.dimensions:
        print(f"{d.key:<5} {d.level:>5} {fmt(d.maturity):>20} "
              f"{d.weight_score:>3} {fmt(d.normalized_weight):>20}", file=out)
    if report.cap_applied:
        print("(weight cap applied)", file=out)
    print(f"L_DT = {fmt(report.overall)}", file=out)


def cmd_score(args, *, clock, out, err, stdin) -> int:
    a, model, ws = _resolve_single(args, clock)
    report = score_assessment(a, model)
    if ws is not None and a.id:
        ws.append_history(a.id, report)
    if args.format == "json":
        print(json.dumps(score_report_to_doc(report)), file=out)
    else:
        _print_human_report(a, report, args.exact, out)
    return EXIT_OK


def cmd_compare(args, *, clock, out, err, stdin) -> int:
    subjects = _resolve_subjects(args, clock)
    portfolio = []
    for a in subjects:
        model = builtin_model() if a.model_ref.id == "dt-core" else None
        if model is None:
            ws = _open_workspace(args, clock)
            model = ws.get_model(a.model_ref.id, a.model_ref.version)
        portfolio.append((a, score_assessment(a, model)))
    result = analysis.compare(portfolio)
    if args.format == "json":
        print(json.dumps(analysis.comparison_to_doc(result)), file=out)
    elif args.format == "csv":
        out.write(analysis.series_to_csv(result.series))
    else:
        policy = RoundingPolicy.EXACT if args.exact else RoundingPolicy.DISPLAY_2DP
        print(analysis.render_comparison(result, policy), file=out)
    return EXIT_OK


def cmd_report(args, *, clock, out, err, stdin) -> int:
    subjects = _resolve_subjects(args, clock)
    series: list[analysis.SeriesPoint] = []
    boundary = None
    for a in subjects:
        model = builtin_model()
        if a.model_ref.id != "dt-core":
            ws = _open_workspace(args, clock)
            model = ws.get_model(a.model_ref.id, a.model_ref.version)
        report = score_assessment(a, model)
        quadrants = analysis.gap_quadrants(report)
        boundary = quadrants.weight_boundary
        series.extend(analysis.series_rows(a.subject.name, report, quadrants))

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "gap_analysis.csv"
    radar_path = out_dir / "radar.svg"
    quad_path = out_dir / "quadrants.svg"
    csv_path.write_text(analysis.series_to_csv(series), encoding="utf-8")
    radar_path.write_text(analysis.radar_svg(series), encoding="utf-8")
    quad_path.write_text(analysis.quadrant_svg(series, boundary), encoding="utf-8")
    if args.format == "json":
        print(json.dumps({"written": [str(csv_path), str(radar_path), str(quad_path)]}),
              file=out)
    else:
        for path in (csv_path, radar_path, quad_path):
            print(f"wrote {path}", file=out)
    return EXIT_OK


def _parse_kv(text: str, caster, what: str) -> dict:
    result = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise errors.DomainError(f"bad {what} entry '{part}', expected KEY=VALUE")
        try:
            result[key.strip()] = caster(value.strip())
        except ValueError:
            raise errors.DomainError(f"bad {what} value '{value}' for '{key}'") from None
    return result


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("yes", "y", "true", "1"):
        return True
    if lowered in ("no", "n", "false", "0"):
        return False
    raise ValueError(text)


def _prompt(stdin, out, text: str) -> str:
    out.write(text)
    out.flush()
    line = stdin.readline()
    if not line:
        raise errors.DomainError("input stream closed during interactive assess")
    return line.strip()


def cmd_assess(args, *, clock, out, err, stdin) -> int:
    ws = _open_workspace(args, clock)
    model = _load_model_arg(args.model, ws)
    if args.model != "builtin":
        ws.register_model(model)

    subject_name = args.subject or _prompt(stdin, out, "Subject name: ")

    if args.answers:
        answers = _parse_kv(args.answers, _parse_bool, "answer")
    else:
        answers = {}
        print("Fundamental conditions (yes/no):", file=out)
        for item in model.gate_checklist_spec:
            answers[item.id] = _parse_bool(
                _prompt(stdin, out, f"  [{item.condition.value}] {item.prompt} ")
            )

    if args.levels:
        levels = _parse_kv(args.levels, int, "level")
    else:
        levels = {}
        for dim in model.dimensions:
            print(f"{dim.name} ({dim.key}):", file=out)
            for lv in dim.levels:
                print(f"  {lv.index}. {lv.name} - {lv.description}", file=out)
            levels[dim.key] = int(_prompt(stdin, out, f"  level for {dim.key} [1-{dim.level_count}]: "))

    if args.weights:
        weights = _parse_kv(args.weights, int, "weight")
    else:
        weights = {}
        scale = model.weight_scale
        labels = ", ".join(
            f"{s}={WEIGHT_SCORE_LABELS.get(s, s)}" for s in range(scale.min, scale.max + 1)
        )
        print(f"Importance weights ({labels}):", file=out)
        for dim in model.dimensions:
            weights[dim.key] = int(
                _prompt(stdin, out, f"  weight for {dim.key} [{scale.min}-{scale.max}]: ")
            )

    now = (clock or (lambda: datetime.now(timezone.utc)))()
    a = Assessment(
        subject=Subject(subject_name, args.description),
        model_ref=ModelRef(model.id, model.version),
        gate_answers=GateChecklist(answers=answers),
        levels=levels,
        weight_scores=weights,
        rater=args.rater,
        timestamp=now.replace(microsecond=0),
    )
    # Reject malformed input before storing; gate failures are stored but flagged.
    from twingauge.scorer import validate_assessment

    validate_assessment(a, model)
    verdict = evaluate_gates(a.gate_answers, model)
    aid = ws.put_assessment(a)
    if args.format == "json":
        print(json.dumps({"id": aid, "gate": verdict_to_doc(verdict)}), file=out)
    else:
        print(f"stored assessment {aid}", file=out)
        if not verdict.passed:
            print(f"note: gates failed, classified {verdict.taxonomy.display_name}; "
                  f"scoring will be refused", file=out)
    return EXIT_OK


def cmd_serve(args, *, clock, out, err, stdin) -> int:
    from twingauge.service.app import serve

    ws = Workspace(args.workspace, clock=clock)
    static = Path(args.static) if args.static else None
    serve(ws, host=args.host, port=args.port, static_dir=static)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
