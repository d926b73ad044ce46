"""Command line entry point: ``tammes10 {solve,build,verify,render}``.

Exit codes: 0 success, 1 verification failure, 2 usage error or
infeasible input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import solver
from .construction import build_configuration
from .document import dumps, loads
from .errors import TammesError
from .render import render_svg
from .verify import danzer_interval_check, verify_configuration

AGREEMENT_TOL = 1e-12
CUBIC_TOL = 1e-10


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo,hi got {text!r}") from None
    return lo, hi


def _triple(text: str) -> tuple[float, float, float]:
    try:
        x, y, z = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y,z got {text!r}") from None
    return x, y, z


def _radius(text: str) -> float:
    if text == "solve":
        return solver.find_root().r
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"--r must be a number or 'solve', got {text!r}") from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    res = solver.find_root(tuple(args.bracket), args.tol)
    closed = solver.closed_form_r10()
    diff = res.r - closed
    cubic = solver.cubic_reduction_check(res.r)
    danzer = danzer_interval_check(res.r)
    ok = abs(diff) <= AGREEMENT_TOL and abs(cubic) <= CUBIC_TOL and danzer
    print(f"root: {res.r!r}")
    print(f"closed_form: {closed!r}")
    print(f"difference: {diff!r}")
    print(f"residual_at_root: {res.residual_at_root!r}")
    print(f"iterations: {res.iterations}")
    print(f"cubic_check: {cubic!r}")
    print(f"danzer_interval: {'PASS' if danzer else 'FAIL'}")
    print(f"agreement: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_build(args) -> int:
    config, _ = build_configuration(_radius(args.r))
    _write(dumps(config), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.input is not None:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(str(exc)) from exc
        config = loads(text)
    else:
        config, _ = build_configuration(_radius(args.r))
    report = verify_configuration(config, samples=args.samples)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.packing_ok and report.covering_ok else 1


def cmd_render(args) -> int:
    config, _ = build_configuration(_radius(args.r))
    _write(render_svg(config, args.view, half_caps=args.half_caps), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tammes10", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the closure condition for r10")
    p.add_argument("--bracket", type=_pair, default=solver.DEFAULT_BRACKET)
    p.add_argument("--tol", type=float, default=solver.DEFAULT_TOL)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("build", help="write the ten-center configuration as JSON")
    p.add_argument("--r", default="solve", help="radius in radians or 'solve'")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check packing and covering")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--in", dest="input", help="configuration document")
    src.add_argument("--r", default="solve", help="radius in radians or 'solve'")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw an orthographic SVG")
    p.add_argument("--r", default="solve", help="radius in radians or 'solve'")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--view", type=_triple, default=(0.0, 0.0, 10.0))
    p.add_argument("--half-caps", action="store_true", help="draw radius r/2 circles")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (TammesError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
