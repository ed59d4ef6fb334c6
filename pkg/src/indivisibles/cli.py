"""Command-line front end.

Subcommands: check (run a script), bounds (certified enclosures), guldin
(profile-file volumes/surfaces), oracle (brute-force estimates), svg (diagram
emission).  Exit codes: 0 success, 1 assertion failure, 2 parse/usage error,
3 geometry or evaluation error, 4 I/O error.  All output is deterministic for
fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from ._kernels import BACKEND
from .dsl import ParseError, RunReport, ScriptError, run_script
from .errors import GeometryError
from .exhaustion import MeasureInterval, SectionFunction, area_bounds, volume_bounds
from .geometry import (
    Polygon,
    Profile,
    WidthFunction,
    area,
    boundary,
    bounding_box,
    centroid_curve,
    centroid_region,
    contains,
    perimeter,
)
from .oracle import mc_area, mc_volume, riemann_volume
from .solids import guldin_surface, guldin_volume, rho_axis
from .svg import render_bounds, render_guldin, render_unroll

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_PARSE = 2
EXIT_GEOMETRY = 3
EXIT_IO = 4


def _emit(pairs) -> str:
    lines = [f"schema_version {SCHEMA_VERSION}", f"tool indivisibles {__version__}"]
    for key, value in pairs:
        if isinstance(value, float):
            value = repr(value)
        lines.append(f"{key} {value}")
    return "\n".join(lines) + "\n"


# --- check ------------------------------------------------------------------


def _check_report(path: str, report: RunReport) -> str:
    pairs = [("command", "check"), ("script", path)]
    for i, rec in enumerate(report.records, start=1):
        pairs.append(
            (
                f"assertion {i}",
                f"line {rec.line} column {rec.column} left {rec.left_value!r} "
                f"right {rec.right_value!r} diff {rec.difference!r} tol {rec.tolerance!r} "
                f"{'pass' if rec.passed else 'fail'}",
            )
        )
    failures = sum(1 for r in report.records if not r.passed)
    pairs.append(("assertions", len(report.records)))
    pairs.append(("failures", failures))
    pairs.append(("overall", "pass" if report.overall_pass else "fail"))
    return _emit(pairs)


def _check_human(path: str, report: RunReport) -> str:
    lines = [f"script {path}"]
    for rec in report.records:
        verdict = "PASS" if rec.passed else "FAIL"
        lines.append(
            f"{verdict}  line {rec.line:>3}  |{rec.left_value!r} - {rec.right_value!r}| "
            f"= {rec.difference!r}  tol {rec.tolerance!r}"
        )
    failures = sum(1 for r in report.records if not r.passed)
    lines.append(f"{len(report.records)} assertions, {failures} failures")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    try:
        with open(args.script, "r", encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.script}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    try:
        report = run_script(source)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ScriptError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    out = _check_report(args.script, report) if args.format == "report" else _check_human(args.script, report)
    sys.stdout.write(out)
    return EXIT_OK if report.overall_pass else EXIT_ASSERTION


# --- bounds -----------------------------------------------------------------


def _bounds_profile(shape: str, r: float, h: float):
    """Width/section profile, closed form and kind for a named shape."""
    if shape == "disk":
        fn = WidthFunction(
            lambda y: 2.0 * np.sqrt(np.maximum(r * r - y * y, 0.0)),
            domain=(-r, r),
            breakpoints=(0.0,),
            monotonicity=("increasing", "decreasing"),
        )
        return fn, math.pi * r * r, "area"
    if shape == "sphere":
        fn = SectionFunction(
            lambda z: math.pi * np.maximum(r * r - z * z, 0.0),
            domain=(-r, r),
            breakpoints=(0.0,),
            monotonicity=("increasing", "decreasing"),
        )
        return fn, 4.0 * math.pi * r**3 / 3.0, "volume"
    if shape == "cone":
        fn = SectionFunction(
            lambda z: math.pi * r * r * (1.0 - z / h) ** 2,
            domain=(0.0, h),
            monotonicity=("decreasing",),
        )
        return fn, math.pi * r * r * h / 3.0, "volume"
    if shape == "hoof":
        slope = h / r
        fn = SectionFunction(
            lambda y: 2.0 * slope * y * np.sqrt(np.maximum(r * r - y * y, 0.0)),
            domain=(0.0, r),
            breakpoints=(r / math.sqrt(2.0),),
            monotonicity=("increasing", "decreasing"),
        )
        return fn, 2.0 * r * r * h / 3.0, "volume"
    raise ValueError(shape)


def _require_positive(parser_hint: str, **values) -> None:
    for name, value in values.items():
        if not (value > 0):
            print(f"usage error: --{name} must be positive for {parser_hint}", file=sys.stderr)
            raise SystemExit(EXIT_PARSE)


def cmd_bounds(args) -> int:
    _require_positive("bounds", r=args.r, h=args.h, slices=args.slices)
    fn, closed, kind = _bounds_profile(args.shape, args.r, args.h)
    interval: MeasureInterval = (
        volume_bounds(fn, args.slices) if isinstance(fn, SectionFunction) else area_bounds(fn, args.slices)
    )
    pairs = [
        ("command", "bounds"),
        ("shape", args.shape),
        ("r", float(args.r)),
    ]
    if args.shape in ("cone", "hoof"):
        pairs.append(("h", float(args.h)))
    pairs += [
        ("slices", args.slices),
        ("measure", kind),
        ("method", interval.method),
        ("slabs", interval.slabs),
        ("lo", interval.lo),
        ("hi", interval.hi),
        ("width", interval.width),
        ("closed_form", closed),
        ("encloses_closed_form", "true" if closed in interval else "false"),
    ]
    sys.stdout.write(_emit(pairs))
    return EXIT_OK


# --- guldin -----------------------------------------------------------------


def read_profile_file(path: str) -> tuple[str, list[tuple[float, float]]]:
    """Parse a profile file: optional ``name`` line plus ``point rho z`` lines."""
    name = "-"
    points: list[tuple[float, float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "name":
                if len(parts) < 2:
                    raise ValueError(f"{path}:{lineno}: name line needs a value")
                name = " ".join(parts[1:])
                continue
            if parts[0] == "point":
                if len(parts) != 3:
                    raise ValueError(f"{path}:{lineno}: point line needs two coordinates")
                try:
                    points.append((float(parts[1]), float(parts[2])))
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: bad coordinate") from None
                continue
            raise ValueError(f"{path}:{lineno}: expected 'name' or 'point', got {parts[0]!r}")
    if len(points) < 3:
        raise ValueError(f"{path}: a profile needs at least 3 points")
    if points[0] == points[-1]:
        raise ValueError(f"{path}: closure is implicit; first point must differ from last")
    return name, points


def cmd_guldin(args) -> int:
    try:
        name, points = read_profile_file(args.profile)
    except OSError as exc:
        print(f"error: cannot read {args.profile}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        polygon = Polygon(points)
        profile = Profile(polygon)
        ring = boundary(polygon)
        c_region = centroid_region(polygon)
        c_curve = centroid_curve(ring)
        vol = guldin_volume(profile)
        surf = guldin_surface(ring, rho_axis())
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    pairs = [
        ("command", "guldin"),
        ("profile", args.profile),
        ("name", name),
        ("points", len(points)),
        ("area", area(polygon)),
        ("perimeter", perimeter(ring)),
        ("centroid_rho", c_region.x),
        ("centroid_z", c_region.y),
        ("curve_centroid_rho", c_curve.x),
        ("curve_centroid_z", c_curve.y),
        ("volume", vol),
        ("surface", surf),
    ]
    if args.verify:
        (rho0, rho1), (z0, z1) = bounding_box(polygon)
        rmax = max(rho1, 0.0)

        def membership(xs, ys, zs):
            return contains(polygon, np.hypot(xs, ys), zs)

        est = mc_volume(
            membership,
            ((-rmax, rmax), (-rmax, rmax), (z0, z1)),
            samples=args.samples,
            seed=args.seed,
        )
        err = abs(est.mean - vol)
        pairs += [
            ("verify_samples", est.samples),
            ("verify_seed", est.seed),
            ("verify_mean", est.mean),
            ("verify_stderr", est.stderr),
            ("verify_abs_error", err),
            ("verify_within_5_stderr", "true" if err <= 5.0 * est.stderr else "false"),
        ]
    sys.stdout.write(_emit(pairs))
    return EXIT_OK


# --- oracle -----------------------------------------------------------------


def _oracle_closed_form(target: str, r: float, big_r: float, h: float) -> float:
    return {
        "disk": math.pi * r * r,
        "sphere": 4.0 * math.pi * r**3 / 3.0,
        "hoof": 2.0 * r * r * h / 3.0,
        "torus": 2.0 * math.pi**2 * big_r * r * r,
    }[target]


def cmd_oracle(args) -> int:
    _require_positive("oracle", r=args.r, R=args.R, h=args.h, samples=args.samples, cells=args.cells)
    r, big_r, h = args.r, args.R, args.h
    closed = _oracle_closed_form(args.target, r, big_r, h)
    pairs = [
        ("command", "oracle"),
        ("target", args.target),
        ("method", args.method),
    ]
    if args.method == "mc":
        if args.target == "disk":
            est = mc_area(
                lambda x, y: x * x + y * y <= r * r, ((-r, r), (-r, r)), args.samples, args.seed
            )
        elif args.target == "sphere":
            est = mc_volume(
                lambda x, y, z: x * x + y * y + z * z <= r * r,
                ((-r, r), (-r, r), (-r, r)),
                args.samples,
                args.seed,
            )
        elif args.target == "hoof":
            slope = h / r
            est = mc_volume(
                lambda x, y, z: (x * x + y * y <= r * r) & (y >= 0.0) & (z <= slope * y),
                ((-r, r), (0.0, r), (0.0, h)),
                args.samples,
                args.seed,
            )
        else:  # torus
            est = mc_volume(
                lambda x, y, z: (np.hypot(x, y) - big_r) ** 2 + z * z <= r * r,
                ((-big_r - r, big_r + r), (-big_r - r, big_r + r), (-r, r)),
                args.samples,
                args.seed,
            )
        pairs += [
            ("samples", est.samples),
            ("seed", est.seed),
            ("mean", est.mean),
            ("stderr", est.stderr),
            ("closed_form", closed),
            ("abs_error", abs(est.mean - closed)),
            ("within_5_stderr", "true" if abs(est.mean - closed) <= 5.0 * est.stderr else "false"),
        ]
    else:  # riemann
        fn, _, _ = (
            _bounds_profile(args.target, r, h)
            if args.target != "torus"
            else (
                SectionFunction(
                    lambda z: 4.0 * math.pi * big_r * np.sqrt(np.maximum(r * r - z * z, 0.0)),
                    domain=(-r, r),
                    breakpoints=(0.0,),
                    monotonicity=("increasing", "decreasing"),
                ),
                closed,
                "volume",
            )
        )
        value = riemann_volume(fn, args.cells)
        pairs += [
            ("cells", args.cells),
            ("value", value),
            ("closed_form", closed),
            ("abs_error", abs(value - closed)),
        ]
    sys.stdout.write(_emit(pairs))
    return EXIT_OK


# --- svg --------------------------------------------------------------------


def cmd_svg(args) -> int:
    if args.construction == "unroll":
        _require_positive("svg", r=args.r)
        if args.n < 3:
            print("usage error: --n must be at least 3 for svg --construction unroll", file=sys.stderr)
            raise SystemExit(EXIT_PARSE)
        content = render_unroll(args.r, args.n)
    elif args.construction == "bounds":
        _require_positive("svg", r=args.r, h=args.h, slices=args.slices)
        fn, _, _ = _bounds_profile(args.shape, args.r, args.h)
        content = render_bounds(fn, args.slices)
    else:  # guldin
        try:
            _, points = read_profile_file(args.profile)
            polygon = Polygon(points)
        except OSError as exc:
            print(f"error: cannot read {args.profile}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        except GeometryError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_GEOMETRY
        content = render_guldin(polygon)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(content)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indivisibles",
        description="Measure-preserving geometry: certified bounds, Guldin theorems, script checking.",
    )
    parser.add_argument("--version", action="version", version=f"indivisibles {__version__} ({BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a construction script and check its assertions")
    p_check.add_argument("script")
    p_check.add_argument("--format", choices=("human", "report"), default="human")
    p_check.set_defaults(func=cmd_check)

    p_bounds = sub.add_parser("bounds", help="certified inner/outer enclosure of a named shape")
    p_bounds.add_argument("--shape", choices=("disk", "sphere", "cone", "hoof"), required=True)
    p_bounds.add_argument("--r", type=float, default=1.0)
    p_bounds.add_argument("--h", type=float, default=1.0)
    p_bounds.add_argument("--slices", type=int, default=1000)
    p_bounds.set_defaults(func=cmd_bounds)

    p_guldin = sub.add_parser("guldin", help="revolution measures of a profile file")
    p_guldin.add_argument("profile")
    p_guldin.add_argument("--verify", action="store_true", help="cross-check the volume by Monte Carlo")
    p_guldin.add_argument("--samples", type=int, default=200000)
    p_guldin.add_argument("--seed", type=int, default=42)
    p_guldin.set_defaults(func=cmd_guldin)

    p_oracle = sub.add_parser("oracle", help="brute-force estimate of a named measure")
    p_oracle.add_argument("--target", choices=("disk", "sphere", "hoof", "torus"), required=True)
    p_oracle.add_argument("--method", choices=("mc", "riemann"), default="mc")
    p_oracle.add_argument("--r", type=float, default=1.0)
    p_oracle.add_argument("--R", type=float, default=3.0)
    p_oracle.add_argument("--h", type=float, default=1.0)
    p_oracle.add_argument("--samples", type=int, default=1000000)
    p_oracle.add_argument("--seed", type=int, default=42)
    p_oracle.add_argument("--cells", type=int, default=1000000)
    p_oracle.set_defaults(func=cmd_oracle)

    p_svg = sub.add_parser("svg", help="emit a deterministic SVG diagram of a construction")
    p_svg.add_argument("--construction", choices=("unroll", "bounds", "guldin"), required=True)
    p_svg.add_argument("--r", type=float, default=1.0)
    p_svg.add_argument("--h", type=float, default=1.0)
    p_svg.add_argument("--n", type=int, default=16)
    p_svg.add_argument("--shape", choices=("disk", "sphere", "cone", "hoof"), default="disk")
    p_svg.add_argument("--slices", type=int, default=12)
    p_svg.add_argument("--profile", help="profile file for --construction guldin")
    p_svg.add_argument("--out", "-o", required=True)
    p_svg.set_defaults(func=cmd_svg)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "svg" and args.construction == "guldin" and not args.profile:
        parser.error("svg --construction guldin needs --profile")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
