"""Command-line front end: analyze maps, trace foliations, browse the gallery.

Commands
--------
analyze   run the full verification pipeline and write a JSON report
foliate   trace leaves of the induced foliation to CSV and/or SVG
gallery   list the built-in maps or show one entry's formula and answers

Exit status is 0 iff every requested phase completed; the content of the
verdicts does not affect it (an honest "no hypothesis verified" analysis
still exits 0).  Phase failures are reported to stderr with a phase tag
and exit nonzero.  Reports are deterministic apart from the timing fields.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time

from .expr import EvaluationError, ParseError, PlanarMap, parse
from .foliation import (
    InversionError,
    default_leaf_parameters,
    diagonalize_involution,
    leaf_invariance_check,
    trace_leaf,
)
from .gallery import GalleryEntry, get as gallery_get, list_entries
from .involution import (
    ORIENTATION_PRESERVING,
    BasePointError,
    DegenerateJacobianError,
    FixedPointScan,
    Region,
    find_fixed_points,
    verify_involution,
)
from .linalg2 import MINUS_IDENTITY, Mat2, SingularMatrixError, Spectrum
from .linearize import (
    InjectivityCertificate,
    NotApplicableError,
    injectivity_scan,
    spectrum_shift_check,
    standard_map,
)
from .spectral import ConditionVerdict, SpectrumSample, theorem_verdict
from .svgplot import write_portrait

_MAX_REPORTED_FIXED_POINTS = 64

_PHASE_ERRORS = (
    ParseError,
    EvaluationError,
    BasePointError,
    DegenerateJacobianError,
    SingularMatrixError,
    NotApplicableError,
    InversionError,
    ValueError,
    KeyError,
    OSError,
)


def _fail(command: str, phase: str, exc: Exception) -> int:
    message = str(exc) if not isinstance(exc, KeyError) else str(exc.args[0])
    print(f"{command}: [{phase}] {message}", file=sys.stderr)
    return 1


# ----------------------------------------------------------------------
# map/window resolution
# ----------------------------------------------------------------------

def _parse_gallery_spec(text: str) -> tuple[str, int | None]:
    parts = text.split(":")
    if len(parts) == 1:
        return parts[0], None
    if len(parts) == 2:
        try:
            return parts[0], int(parts[1])
        except ValueError:
            raise ValueError(f"bad gallery parameter {parts[1]!r}: expected an integer") from None
    raise ValueError(f"bad gallery spec {text!r}: expected NAME or NAME:n")


def _resolve_map(args) -> tuple[PlanarMap, str, GalleryEntry | None]:
    spec = getattr(args, "map_spec", None)
    if spec is None and args.map is None and args.gallery is None:
        raise ValueError("no map given: pass MAP_SPEC, --map EXPR, or --gallery NAME[:n]")
    if spec is not None:
        if spec.startswith("gallery:"):
            name, n = _parse_gallery_spec(spec[len("gallery:"):])
            entry = gallery_get(name, n)
            return entry.map, _canonical_source(entry), entry
        return parse(spec), spec, None
    if args.gallery is not None:
        name, n = _parse_gallery_spec(args.gallery)
        entry = gallery_get(name, n)
        return entry.map, _canonical_source(entry), entry
    return parse(args.map), args.map, None


def _canonical_source(entry: GalleryEntry) -> str:
    if entry.n is None:
        return f"gallery:{entry.name}"
    return f"gallery:{entry.name}:{entry.n}"


def _resolve_window(args, entry: GalleryEntry | None) -> Region:
    grid = args.grid
    if args.window is not None:
        try:
            vals = [float(v) for v in args.window.split(",")]
        except ValueError:
            raise ValueError(f"bad --window {args.window!r}: expected XMIN,XMAX,YMIN,YMAX") from None
        if len(vals) != 4:
            raise ValueError(f"bad --window {args.window!r}: expected four comma-separated numbers")
        return Region(vals[0], vals[1], vals[2], vals[3], grid)
    if entry is not None:
        return entry.window.with_grid(grid)
    return Region(-5.0, 5.0, -5.0, 5.0, grid)


# ----------------------------------------------------------------------
# report serialization
# ----------------------------------------------------------------------

def _ser_point(p: tuple[float, float]) -> list[float]:
    return [float(p[0]), float(p[1])]


def _ser_mat(m: Mat2) -> list[list[float]]:
    return [[m.a11, m.a12], [m.a21, m.a22]]


def _ser_complex(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _ser_spectrum(s: Spectrum) -> dict:
    return {"lambda1": _ser_complex(s.lambda1), "lambda2": _ser_complex(s.lambda2)}


def _ser_sample(sample: SpectrumSample | None) -> dict | None:
    if sample is None:
        return None
    return {
        "point": _ser_point(sample.point),
        "spectrum": _ser_spectrum(sample.spectrum),
        "trace_product": sample.trace_product,
    }


def _ser_condition(cond: ConditionVerdict) -> dict:
    margin = cond.margin
    return {
        "condition": cond.condition,
        "holds_on_window": cond.holds_on_window,
        "margin": margin if math.isfinite(margin) else None,
        "witness": _ser_sample(cond.witness),
    }


def _ser_region(region: Region) -> dict:
    return {
        "x_min": region.x_min,
        "x_max": region.x_max,
        "y_min": region.y_min,
        "y_max": region.y_max,
        "grid_n": region.grid_n,
    }


def _ser_fixed_points(scan: FixedPointScan) -> dict:
    return {
        "count": len(scan.points),
        "curve": scan.curve,
        "seeds_converged": scan.seeds_converged,
        "seeds_skipped": scan.seeds_skipped,
        "points": [
            {
                "location": _ser_point(fp.location),
                "classification": fp.classification,
                "jacobian": _ser_mat(fp.jacobian),
            }
            for fp in scan.points[:_MAX_REPORTED_FIXED_POINTS]
        ],
    }


def _ser_injectivity(cert: InjectivityCertificate, scan_n: int,
                     collision_tol: float, separation_min: float) -> dict:
    return {
        "status": cert.status,
        "witness_pair": None if cert.witness_pair is None else
        [_ser_point(cert.witness_pair[0]), _ser_point(cert.witness_pair[1])],
        "cells_checked": cert.cells_checked,
        "scan_n": scan_n,
        "collision_tol": collision_tol,
        "separation_min": separation_min,
    }


def _write_report(report: dict, out_path: str | None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------

def cmd_analyze(args) -> int:
    timings: dict[str, float] = {}

    def timed(phase, fn):
        t0 = time.perf_counter()
        result = fn()
        timings[phase] = (time.perf_counter() - t0) * 1e3
        return result

    phase = "setup"
    try:
        planar_map, source, entry = _resolve_map(args)
        region = _resolve_window(args, entry)
    except _PHASE_ERRORS as exc:
        return _fail("analyze", phase, exc)

    report = {
        "map_source": source,
        "window": _ser_region(region),
        "flags": {
            "grid": region.grid_n,
            "eps": args.eps,
            "tol": args.tol,
            "scan": args.scan,
        },
    }
    if entry is not None and entry.recentered_at is not None:
        report["recentered_at"] = _ser_point(entry.recentered_at)

    try:
        phase = "verify"
        check = timed(phase, lambda: verify_involution(planar_map, region, args.tol))
        report["involution"] = {
            "max_residual": check.max_residual,
            "passed": check.passed,
            "worst_point": _ser_point(check.worst_point),
        }
        if not check.passed:
            # not an involution: later phases are meaningless, report honestly
            report.update({
                "orientation": None,
                "fixed_points": None,
                "conditions": [],
                "theorem_verdict": (
                    "not an involution on the window "
                    f"(max residual {check.max_residual:.3e} at "
                    f"({check.worst_point[0]:g}, {check.worst_point[1]:g}))"
                ),
                "linearizable_on_window": False,
                "injectivity": None,
                "spectrum_shift_deviation": None,
                "foliation_kind": None,
                "leaf_count": 0,
                "timings_ms": timings,
            })
            _write_report(report, args.out)
            return 0

        phase = "fixed-points"
        scan = timed(phase, lambda: find_fixed_points(planar_map, region, args.tol))

        phase = "spectrum"
        assessment = timed(phase, lambda: theorem_verdict(planar_map, region, args.eps))

        phase = "injectivity"
        h = standard_map(planar_map)
        sep = 1e-3 * region.diameter
        cert = timed(phase, lambda: injectivity_scan(h, region, args.scan, 1e-6, sep))

        phase = "spectrum-shift"
        shift_deviation = None
        if (assessment.orientation.kind == ORIENTATION_PRESERVING
                and (h.linear_part - MINUS_IDENTITY).max_abs() <= 1e-9):
            shift_deviation = timed(phase, lambda: spectrum_shift_check(planar_map, region))

        phase = "foliation-kind"
        try:
            foliation_kind = diagonalize_involution(h.linear_part).kind
        except ValueError:
            foliation_kind = None  # identity linear part

        report.update({
            "orientation": {
                "kind": assessment.orientation.kind,
                "min_abs_det": assessment.orientation.min_abs_det,
            },
            "base_point": _ser_point(assessment.base_point),
            "fixed_points": _ser_fixed_points(scan),
            "conditions": [_ser_condition(c) for c in assessment.conditions],
            "theorem_verdict": assessment.verdict,
            "linearizable_on_window": assessment.linearizable_on_window,
            "injectivity": _ser_injectivity(cert, args.scan, 1e-6, sep),
            "spectrum_shift_deviation": shift_deviation,
            "foliation_kind": foliation_kind,
            "leaf_count": 0,
            "timings_ms": timings,
        })
        phase = "write"
        _write_report(report, args.out)
    except _PHASE_ERRORS as exc:
        return _fail("analyze", phase, exc)
    return 0


# ----------------------------------------------------------------------
# foliate
# ----------------------------------------------------------------------

def cmd_foliate(args) -> int:
    if args.svg is None and args.csv is None:
        print("foliate: specify --svg PATH and/or --csv PATH", file=sys.stderr)
        return 2

    phase = "setup"
    try:
        planar_map, source, entry = _resolve_map(args)
        region = _resolve_window(args, entry)
    except _PHASE_ERRORS as exc:
        return _fail("foliate", phase, exc)

    try:
        phase = "verify"
        check = verify_involution(planar_map, region, args.tol)
        if not check.passed and not args.force:
            print(
                f"foliate: [{phase}] not an involution on the window "
                f"(max residual {check.max_residual:.3e}); use --force to trace anyway",
                file=sys.stderr,
            )
            return 1

        phase = "spectrum"
        certified = False
        verdict = "skipped (--force)"
        if check.passed:
            assessment = theorem_verdict(planar_map, region, args.eps)
            certified = assessment.linearizable_on_window
            verdict = assessment.verdict
        if not certified and not args.force:
            print(
                f"foliate: [{phase}] {verdict}; use --force to trace the "
                "foliation without a certificate",
                file=sys.stderr,
            )
            return 1

        phase = "standard-map"
        h = standard_map(planar_map)
        fol = diagonalize_involution(h.linear_part)

        phase = "trace"
        parameters = default_leaf_parameters(h, fol, region, args.leaves)
        leaves = [
            trace_leaf(h, fol, c, region, step=args.step)
            for c in parameters
        ]
        invariance = max(
            (leaf_invariance_check(planar_map, h, fol, leaf) for leaf in leaves),
            default=0.0,
        )

        phase = "fixed-points"
        scan = find_fixed_points(planar_map, region, args.tol) if check.passed else None

        phase = "write"
        if args.csv is not None:
            _write_leaf_csv(args.csv, leaves)
        if args.svg is not None:
            write_portrait(
                args.svg, region, leaves,
                scan.points if scan is not None else [],
                title=f"foliation of {source}",
            )
    except _PHASE_ERRORS as exc:
        return _fail("foliate", phase, exc)

    truncated = sum(1 for leaf in leaves if leaf.truncated)
    max_residual = max((leaf.residual for leaf in leaves), default=0.0)
    print(f"foliation kind: {fol.kind}")
    print(f"leaves traced: {len(leaves)} ({truncated} truncated)")
    print(f"max leaf residual: {max_residual:.3e}")
    print(f"max invariance residual: {invariance:.3e}")
    print(f"certificate: {'verified' if certified else 'UNCERTIFIED'} ({verdict})")
    return 0


def _write_leaf_csv(path: str, leaves) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["leaf_id", "leaf_parameter", "point_index", "x", "y", "residual"])
        for leaf_id, leaf in enumerate(leaves):
            for i, (p, res) in enumerate(zip(leaf.points, leaf.point_residuals)):
                writer.writerow([leaf_id, repr(leaf.parameter), i,
                                 repr(p[0]), repr(p[1]), repr(res)])


# ----------------------------------------------------------------------
# gallery
# ----------------------------------------------------------------------

def cmd_gallery(args) -> int:
    if args.action == "list":
        for name in list_entries():
            print(f"{name:<16} {gallery_get(name).description}")
        return 0
    if args.name is None:
        print("gallery: show needs an entry name", file=sys.stderr)
        return 2
    try:
        name, n = _parse_gallery_spec(args.name)
        entry = gallery_get(name, n)
    except (KeyError, ValueError) as exc:
        return _fail("gallery", "lookup", exc)
    print(f"name:        {entry.name}" + (f" (n = {entry.n})" if entry.n is not None else ""))
    print(f"formula:     {entry.formula}")
    print(f"description: {entry.description}")
    print(f"window:      [{entry.window.x_min:g}, {entry.window.x_max:g}] x "
          f"[{entry.window.y_min:g}, {entry.window.y_max:g}]")
    print(f"orientation: {entry.orientation}")
    print(f"expected verdict: {entry.expected_verdict}")
    if entry.foliation_equation:
        print(f"foliation:   {entry.foliation_equation}")
    if entry.recentered_at is not None:
        print(f"recentered at fixed point ({entry.recentered_at[0]:g}, "
              f"{entry.recentered_at[1]:g})")
    return 0


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

def _add_map_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("map_spec", nargs="?", default=None,
                     help="expression pair like '(x - y^3, -y)' or gallery:NAME[:n]")
    sub.add_argument("--map", default=None, help="map as an expression pair")
    sub.add_argument("--gallery", default=None, help="gallery entry NAME[:n]")
    sub.add_argument("--window", default=None,
                     help="XMIN,XMAX,YMIN,YMAX (default: gallery window or -5,5,-5,5)")
    sub.add_argument("--grid", type=int, default=41, help="grid nodes per axis (default 41)")
    sub.add_argument("--tol", type=float, default=1e-9,
                     help="involution / fixed-point tolerance (default 1e-9)")
    sub.add_argument("--eps", type=float, default=0.1,
                     help="epsilon for the [1, 1+eps) spectral gap test (default 0.1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarinv",
        description="Analyze planar involutions: verification, spectral conditions, "
                    "explicit linearization, and invariant foliations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="run the full pipeline and write a JSON report")
    _add_map_args(pa)
    pa.add_argument("--scan", type=int, default=201,
                    help="injectivity scan resolution per axis (default 201)")
    pa.add_argument("--out", default=None, help="report path (default: stdout)")
    pa.set_defaults(func=cmd_analyze)

    pf = sub.add_parser("foliate", help="trace the induced foliation to CSV/SVG")
    _add_map_args(pf)
    pf.add_argument("--leaves", type=int, default=None,
                    help="number of leaves (default: 24 radial / 21 vertical)")
    pf.add_argument("--step", type=float, default=1e-2,
                    help="continuation step in the target plane (default 0.01)")
    pf.add_argument("--svg", default=None, help="SVG portrait output path")
    pf.add_argument("--csv", default=None, help="leaf polyline CSV output path")
    pf.add_argument("--force", action="store_true",
                    help="trace even when no linearization hypothesis is verified")
    pf.set_defaults(func=cmd_foliate)

    pg = sub.add_parser("gallery", help="list built-in maps or show one entry")
    pg.add_argument("action", choices=("list", "show"))
    pg.add_argument("name", nargs="?", default=None, help="entry name for show, NAME[:n]")
    pg.set_defaults(func=cmd_gallery)

    return parser


def _merge_window_flag(argv: list[str]) -> list[str]:
    """Join '--window' with its value so negative bounds survive argparse.

    argparse treats '-5,5,-5,5' as an option string; '--window=-5,5,-5,5'
    is unambiguous, so rewrite the two-token form into it.
    """
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            merged.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = build_parser().parse_args(_merge_window_flag(argv))
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
