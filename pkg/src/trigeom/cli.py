"""Command-line front end: ``trigeom check | eval | centers | figure``.

Exit codes: 0 when everything passes, 1 when an assertion or check fails,
2 for usage errors (bad flags, unreadable or malformed input, unknown ids,
degenerate triangles).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from trigeom import figures
from trigeom.centers import configuration
from trigeom.errors import GeometryError, InvalidSampleCount
from trigeom.kernel import Tolerance, Triangle
from trigeom.script import ScriptSyntaxError, bind, evaluate, parse
from trigeom.script.ast import Emit
from trigeom.theorems import get_check, random_triangles, registry, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 42
CENTERS_SCHEMA = "trigeom.centers/1"

PRESETS = {
    "T0": (0.0, 0.0, 4.0, 0.0, 1.0, 3.0),
    "equilateral": (0.0, math.sqrt(3.0), -1.0, 0.0, 1.0, 0.0),
}


class UsageError(Exception):
    pass


def _parse_triangle(text: str) -> Triangle:
    if text in PRESETS:
        coords = PRESETS[text]
    else:
        try:
            coords = tuple(float(v) for v in text.split(","))
        except ValueError:
            raise UsageError(f"--triangle: expected six comma-separated numbers or a preset, got {text!r}")
        if len(coords) != 6 or not all(math.isfinite(c) for c in coords):
            raise UsageError(f"--triangle: expected six finite coordinates, got {text!r}")
    try:
        return Triangle.from_coords(coords)
    except GeometryError as exc:
        raise UsageError(f"--triangle: {exc}")


def _default_seed() -> int:
    env = os.environ.get("GEO_SEED")
    if env is None or env == "":
        return DEFAULT_SEED
    try:
        return int(env, 0)
    except ValueError:
        raise UsageError(f"GEO_SEED must be an integer, got {env!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                        help=f"64-bit seed (default: $GEO_SEED or {DEFAULT_SEED})")
    common.add_argument("--samples", type=int, default=200, help="number of random triangles (default 200)")
    common.add_argument("--eps", type=float, default=1e-7, help="pass threshold on scale-normalized residuals")
    common.add_argument("--triangle", default=None,
                        help="x1,y1,x2,y2,x3,y3 or a preset (" + ", ".join(PRESETS) + ")")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="trigeom", description="Triangle geometry theorem checker.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run the theorem suite")
    c.add_argument("--only", action="append", default=None, metavar="ID", help="run only this check (repeatable)")
    c.add_argument("--plot", default=None, metavar="PATH", help="also save a residual bar chart (PNG)")

    e = sub.add_parser("eval", parents=[common], help="evaluate a .geo script")
    e.add_argument("script")

    sub.add_parser("centers", parents=[common], help="print the named points of a triangle")

    f = sub.add_parser("figure", parents=[common], help="draw a theorem configuration or a script")
    f.add_argument("what", help="check id or path to a .geo script")
    f.add_argument("--width", type=int, default=600, help="figure width in pixels")
    return p


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _tolerance(eps: float) -> Tolerance:
    try:
        return Tolerance(eps_rel=eps)
    except ValueError:
        raise UsageError(f"--eps must lie in (1e-12, 1), got {eps!r}")


def _fmt(x) -> str:
    return x if isinstance(x, str) else f"{x:.3e}"


def cmd_check(args) -> int:
    tol = _tolerance(args.eps)
    if args.samples < 1:
        raise UsageError(f"--samples must be at least 1, got {args.samples}")
    checks = None
    if args.only:
        try:
            checks = [get_check(i) for i in args.only]
        except KeyError as exc:
            raise UsageError(f"unknown check id {exc.args[0]!r}")
    triangles = [_parse_triangle(args.triangle)] if args.triangle else None
    try:
        report = run_suite(args.seed, args.samples, tol, triangles=triangles, checks=checks)
    except InvalidSampleCount as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        rows = ["id\tpassed\tworst_residual\tPASS\tFAIL\tSKIPPED_DEGENERATE\tCONSTRUCTION_ERROR\texperimental"]
        for s in report.to_dict()["checks"]:
            n = s["counts"]
            rows.append("\t".join([
                s["id"], "yes" if s["passed"] else "NO", _fmt(s["worst_residual"]),
                str(n["PASS"]), str(n["FAIL"]), str(n["SKIPPED_DEGENERATE"]), str(n["CONSTRUCTION_ERROR"]),
                "yes" if s["experimental"] else "no",
            ]))
        rows.append(f"# seed={report.seed} triangles={report.triangle_count} eps={tol.eps_rel:g} "
                    f"result={'PASS' if report.passed else 'FAIL'}")
        _emit("\n".join(rows) + "\n", args.out)
    if args.plot:
        figures.plot_residuals(report.to_dict()["checks"], tol.eps_rel, args.plot)
    return EXIT_OK if report.passed else EXIT_FAIL


def _load_script(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    try:
        return parse(text)
    except ScriptSyntaxError as exc:
        raise UsageError(exc.diagnostic.format(path))


def cmd_eval(args) -> int:
    tol = _tolerance(args.eps)
    if args.samples < 1:
        raise UsageError(f"--samples must be at least 1, got {args.samples}")
    script = _load_script(args.script)
    tri = _parse_triangle(args.triangle) if args.triangle else None
    report = evaluate(script, triangle=tri, samples=args.samples, tol=tol, seed=args.seed)
    for a in report.assertions:
        if a.error is not None:
            sys.stderr.write(f"{args.script}:{a.error.span.line}:{a.error.span.column}: error: "
                             f"{a.error.message} (triangle {a.error_triangle})\n")
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        rows = ["line\tcolumn\tstatus\tmax_residual\tassertion"]
        for a in report.assertions:
            rows.append(f"{a.span.line}\t{a.span.column}\t{a.status}\t{_fmt(a.max_residual)}\t{a.source}")
        rows.append(f"# seed={report.seed} triangles={report.n_triangles} eps={tol.eps_rel:g} "
                    f"result={'PASS' if report.passed else 'FAIL'}")
        _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _coord(v: float) -> str:
    s = f"{v:.12f}"
    return s[1:] if s.startswith("-") and float(s) == 0.0 else s


def cmd_centers(args) -> int:
    if not args.triangle:
        raise UsageError("centers needs an explicit --triangle")
    t = _parse_triangle(args.triangle)
    try:
        cfg = configuration(t)
    except GeometryError as exc:
        raise UsageError(f"cannot build the configuration: {exc}")
    pts = list(cfg.points())
    if args.format == "json":
        doc = {
            "schema": CENTERS_SCHEMA,
            "triangle": [c for p in t.vertices for c in (p.x, p.y)],
            "degenerate": cfg.degenerate,
            "points": [{"name": n, "x": p.x + 0.0, "y": p.y + 0.0} for n, p in pts],
        }
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{n} {_coord(p.x)} {_coord(p.y)}\n" for n, p in pts), args.out)
    return EXIT_OK


def _figure_triangle(args) -> Triangle:
    if args.triangle:
        return _parse_triangle(args.triangle)
    return random_triangles(args.seed, 1)[0]


def cmd_figure(args) -> int:
    if args.width < 16:
        raise UsageError(f"--width must be at least 16, got {args.width}")
    t = _figure_triangle(args)
    if args.what.endswith(".geo") or Path(args.what).is_file():
        script = _load_script(args.what)
        env = bind(script, t, _tolerance(args.eps))
        items = figures.items_from_env(env)
        labels = [s.label for s in script.statements if isinstance(s, Emit)]
        title = "; ".join(labels) or Path(args.what).stem
    else:
        try:
            check = get_check(args.what)
        except KeyError:
            raise UsageError(f"unknown check id {args.what!r}; known: {', '.join(c.id for c in registry())}")
        try:
            cfg = configuration(t)
        except GeometryError as exc:
            raise UsageError(f"cannot build the configuration: {exc}")
        items = figures.items_from_config(cfg, check.figure)
        title = f"{check.id}: {check.description}"
    if args.out and args.out.lower().endswith(".png"):
        figures.render_png(items, args.out, title, args.width)
    else:
        _emit(figures.render_svg(items, title, args.width), args.out)
    return EXIT_OK


COMMANDS = {"check": cmd_check, "eval": cmd_eval, "centers": cmd_centers, "figure": cmd_figure}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.seed is None:
            args.seed = _default_seed()
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"trigeom {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
