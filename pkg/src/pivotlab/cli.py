"""Command-line front end.

Subcommands: pivot (closed-form pivots of a point file), sweep (classified
pivots over all repetition combinations, CSV/SVG), pseudopivot (iterated
collinear triple, CSV/SVG), verify (pass/fail suites over the oracle and
region checks). Exit codes: 0 success, 1 verification failure, 2 usage or
format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from io import StringIO
from pathlib import Path

from . import dynamics, formats, oracle, regions, svg
from .errors import PivotlabError, UsageError
from .geometry import Multiplicities, PointSet, fit_weighted_line, pivot_point_weighted

POINT_RADIUS = 4.0
PIVOT_RADIUS = 2.0

CONVERGENCE_SCHEDULE = (10, 100, 1_000, 10_000, 100_000, 1_000_000)
DEFAULT_INVARIANCE_KMAX = 50
DEFAULT_REGIONS_KMAX = 4


def _parse_delta(text: str) -> Multiplicities:
    try:
        return Multiplicities(int(cell) for cell in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --delta value {text!r}: {exc}") from None


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# pivot
# --------------------------------------------------------------------------


def cmd_pivot(args) -> int:
    points, delta = formats.load_points(args.file)
    if args.delta is not None:
        delta = _parse_delta(args.delta)
    labels = [args.label] if args.label is not None else list(points.labels)
    for label in labels:
        result = pivot_point_weighted(points, label, delta)
        if result.is_finite:
            p = result.point
            print(f"{label},{formats.format_number(p.x)},{formats.format_number(p.y)}")
        else:
            print(f"{label},{formats.INF}")
    return 0


# --------------------------------------------------------------------------
# sweep
# --------------------------------------------------------------------------


def _sweep_svg(points: PointSet, records) -> str:
    markers = []
    for rec in records:
        if rec.pivot is not None:
            markers.append(
                svg.Marker(rec.pivot[0], rec.pivot[1], svg.label_color(rec.label), PIVOT_RADIUS)
            )
    for label in points.labels:
        p = points.point(label)
        markers.append(svg.Marker(p.x, p.y, svg.label_color(label), POINT_RADIUS))
    line = fit_weighted_line(points)
    xs = [m.x for m in markers]
    xlo, xhi = min(xs), max(xs)
    base = svg.Polyline(((xlo, line.y_at(xlo)), (xhi, line.y_at(xhi))), "#555555")
    return svg.render_scatter(markers, [base])


def cmd_sweep(args) -> int:
    points, _ = formats.load_points(args.file)
    if not args.hull and len(points) not in (3, 4):
        raise UsageError(
            f"region sweep supports 3 or 4 points (got {len(points)}); use --hull for larger sets"
        )
    records = list(
        regions.iter_sweep_records(points, args.kmax, hull=args.hull, tol=args.tol)
    )
    buf = StringIO()
    formats.write_sweep_csv(buf, records, len(points))
    _emit(buf.getvalue(), args.out_csv)
    if args.out_svg:
        Path(args.out_svg).write_text(_sweep_svg(points, records), encoding="utf-8")
    return 0


# --------------------------------------------------------------------------
# pseudopivot
# --------------------------------------------------------------------------


def _trace_svg(trace: dynamics.IterationTrace) -> str:
    markers = []
    paths = {name: [] for name in dynamics.LABELS}
    for n, state in enumerate(trace.states):
        for j, name in enumerate(dynamics.LABELS):
            val = float(state.values[j])
            markers.append(svg.Marker(val, float(n), svg.label_color(j + 1), PIVOT_RADIUS))
            paths[name].append((val, float(n)))
    lines = [
        svg.Polyline(tuple(pts), svg.label_color(j + 1))
        for j, (name, pts) in enumerate(paths.items())
        if len(pts) > 1
    ]
    return svg.render_scatter(markers, lines)


def cmd_pseudopivot(args) -> int:
    raw = args.values
    try:
        if args.exact:
            state = dynamics.PseudopivotState.exact_rational(*(Fraction(v) for v in raw))
        else:
            state = dynamics.PseudopivotState.floating(*(float(v) for v in raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad triple {raw}: {exc}") from None
    if len(set(state.values)) != 3:
        raise UsageError(f"triple values must be distinct, got {raw}")
    trace = dynamics.iterate(state, args.steps)
    buf = StringIO()
    formats.write_trace_csv(buf, trace)
    _emit(buf.getvalue(), args.out_csv)
    if trace.reason != dynamics.COMPLETED:
        detail = ""
        if trace.reason == dynamics.DIVERGED:
            labels = dynamics.divergent_labels(trace.states[-1])
            detail = f" (vanishing denominator for {', '.join(labels)})"
        print(
            f"note: stopped after {trace.steps} of {args.steps} steps: {trace.reason}{detail}",
            file=sys.stderr,
        )
    if args.out_svg:
        Path(args.out_svg).write_text(_trace_svg(trace), encoding="utf-8")
    return 0


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def _verify_invariance(points: PointSet, k_max: int, tol: float) -> dict:
    rows = []
    for label in points.labels:
        rep = oracle.verify_pivot_invariance(points, label, k_max, tol)
        rows.append(
            {
                "label": label,
                "status": rep.status,
                "max_distance": rep.max_distance,
            }
        )
        print(f"invariance label {label}: {rep.status} (max distance {rep.max_distance:.3e})")
    passed = all(r["status"] != "fail" for r in rows)
    return {"suite": "invariance", "passed": passed, "k_max": k_max, "tol": tol, "labels": rows}


def _verify_convergence(points: PointSet) -> dict:
    rows = []
    for r in points.labels:
        probe = oracle.farthest_probe_label(points, r)
        rep = oracle.verify_convergence(points, r, probe, CONVERGENCE_SCHEDULE)
        rows.append(
            {
                "repeated": r,
                "probe": probe,
                "passed": rep.passed,
                "final_distance": rep.final_distance,
            }
        )
        status = "pass" if rep.passed else "fail"
        final = "inf" if rep.final_distance is None else f"{rep.final_distance:.3e}"
        print(f"convergence repeated {r} probe {probe}: {status} (final distance {final})")
    passed = all(r["passed"] for r in rows)
    return {
        "suite": "convergence",
        "passed": passed,
        "schedule": list(CONVERGENCE_SCHEDULE),
        "pairs": rows,
    }


def _verify_regions(points: PointSet, k_max: int, tol: float) -> dict:
    n = len(points)
    if n == 3:
        report = regions.three_point_line_check(points, k_max, tol)
    elif n == 4:
        report = regions.four_point_region_sweep(points, k_max, tol)
    else:
        report = regions.hull_bound_check(points, k_max, tol)
    status = "pass" if report.passed else "fail"
    print(
        f"regions ({report.check}, k_max={k_max}): {status} "
        f"({report.combination_count} combinations, {len(report.violations)} violations)"
    )
    for v in report.violations[:10]:
        print(
            f"  violation: label {v.label} k={v.repetitions} -> {v.classification} ({v.reason})"
        )
    return {"suite": "regions", "passed": report.passed, "report": report.to_json_dict()}


def cmd_verify(args) -> int:
    points, _ = formats.load_points(args.file)
    if args.suite == "invariance":
        k_max = args.kmax if args.kmax is not None else DEFAULT_INVARIANCE_KMAX
        summary = _verify_invariance(points, k_max, args.tol)
    elif args.suite == "convergence":
        summary = _verify_convergence(points)
    else:
        k_max = args.kmax if args.kmax is not None else DEFAULT_REGIONS_KMAX
        summary = _verify_regions(points, k_max, args.tol)
    verdict = "PASS" if summary["passed"] else "FAIL"
    print(f"suite {args.suite}: {verdict}")
    payload = json.dumps(summary, sort_keys=True)
    print(payload)
    if args.out_json:
        Path(args.out_json).write_text(payload + "\n", encoding="utf-8")
    return 0 if summary["passed"] else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pivotlab",
        description="Pivot points of least-squares lines under datum repetition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pivot", help="pivot point(s) of a point file")
    p.add_argument("file")
    p.add_argument("--label", type=int, default=None, help="1-based label (default: all)")
    p.add_argument("--delta", default=None, help="comma-separated multiplicities")
    p.set_defaults(func=cmd_pivot)

    p = sub.add_parser("sweep", help="classify pivots over all repetition combinations")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, required=True, help="max repetitions per point")
    p.add_argument("--hull", action="store_true", help="hull containment mode (n >= 4)")
    p.add_argument("--tol", type=float, default=regions.SIGN_TOL)
    p.add_argument("--out-csv", default=None, help="write CSV here instead of stdout")
    p.add_argument("--out-svg", default=None, help="also render an SVG scatter")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("pseudopivot", help="iterate a collinear scalar triple")
    p.add_argument("values", nargs=3, help="three distinct values")
    p.add_argument("--steps", "-n", type=int, required=True, help="iterations to attempt")
    p.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    p.add_argument("--out-csv", default=None, help="write CSV here instead of stdout")
    p.add_argument("--out-svg", default=None, help="also render value-vs-step SVG")
    p.set_defaults(func=cmd_pseudopivot)

    p = sub.add_parser("verify", help="run a verification suite on a point file")
    p.add_argument("file")
    p.add_argument("--suite", choices=("invariance", "convergence", "regions"), required=True)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out-json", default=None, help="also write the JSON summary here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PivotlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
