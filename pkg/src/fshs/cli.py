"""Command line entry point ``fshs``.

Exit codes: 0 success, 2 invalid input, 3 the solver did not converge,
4 stability undecided (only with ``--strict``).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .config import Config
from .geometry import convex_hull
from .regions import NonConvergence, hausdorff_distance
from .scenario import (
    ParseError,
    ValidationError,
    builtin_hexagon,
    load_compact,
    load_report,
    load_scenario,
    save_json,
    save_report,
)

EXIT_OK, EXIT_INVALID, EXIT_NONCONVERGENCE, EXIT_UNDECIDED = 0, 2, 3, 4


def _parse_d(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--d expects comma-separated numbers, got {text!r}")


def _config(sc, args) -> Config:
    cfg = sc.to_config()
    return cfg.with_overrides(starts=getattr(args, "starts", None), eps=getattr(args, "eps", None),
                              seed=getattr(args, "seed", None),
                              oracle=True if getattr(args, "oracle", False) else None)


def _emit(doc, args) -> None:
    from .reports import verdict_line
    if getattr(args, "out", None):
        save_report(doc, args.out)
    print(verdict_line(doc))


def cmd_solve(args) -> int:
    from .reports import solve_document
    sc = load_scenario(args.scenario)
    doc = solve_document(sc, _config(sc, args))
    _emit(doc, args)
    if doc["oracle"] is not None:
        o = doc["oracle"]
        print(f"grid oracle: S_upper = {o['S_upper']:.12g} (h = {o['h']:g}), "
              f"{'consistent' if o['agrees'] else 'INCONSISTENT'}")
    return EXIT_OK


def cmd_hausdorff(args) -> int:
    a, b = load_compact(args.a), load_compact(args.b)
    X = convex_hull(a.points) if args.conv in ("a", "both") else a
    Y = convex_hull(b.points) if args.conv in ("b", "both") else b
    value, err = hausdorff_distance(X, Y, Config())
    print(f"d_H = {value:.17g} (certified error {err:.3g})")
    return EXIT_OK


def cmd_classify(args) -> int:
    from .reports import classify_document
    sc = load_scenario(args.scenario)
    if len(args.d) != len(sc.boundary):
        raise ValidationError([f"--d has {len(args.d)} values for {len(sc.boundary)} compacts"])
    if any(x < 0 for x in args.d):
        raise ValidationError(["--d values must be non-negative"])
    try:
        doc = classify_document(sc, args.d, sc.to_config())
    except ValueError as exc:
        raise ValidationError([str(exc)])
    _emit(doc, args)
    return EXIT_OK


def cmd_stability(args) -> int:
    from .reports import stability_document
    sc = load_scenario(args.scenario)
    doc = stability_document(sc, sc.to_config())
    _emit(doc, args)
    if args.strict and doc["stability"]["verdict"] == "undecided":
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_hexagon(args) -> int:
    sc = builtin_hexagon().to_dict()
    if args.out:
        save_json(sc, args.out)
        print(f"wrote {args.out}")
    else:
        from .scenario import dumps
        print(dumps(sc))
    return EXIT_OK


def cmd_render(args) -> int:
    from .plotting import render_svg
    doc = load_report(args.report)
    render_svg(doc, args.svg)
    print(f"wrote {args.svg}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fshs", description="Minimal fillings of finite planar boundaries.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="optimise the solution vector of a scenario")
    s.add_argument("scenario")
    s.add_argument("--out")
    s.add_argument("--starts", type=int)
    s.add_argument("--eps", type=float)
    s.add_argument("--seed", type=int)
    s.add_argument("--oracle", action="store_true", help="also run the grid oracle")
    s.set_defaults(func=cmd_solve)

    h = sub.add_parser("hausdorff", help="Hausdorff distance of two point sets")
    h.add_argument("a")
    h.add_argument("b")
    h.add_argument("--conv", choices=["a", "b", "both", "none"], default="none")
    h.set_defaults(func=cmd_hausdorff)

    c = sub.add_parser("classify", help="classify boundary points for a given d")
    c.add_argument("scenario")
    c.add_argument("--d", type=_parse_d, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_classify)

    st = sub.add_parser("stability", help="decide whether convexifying changes the optimum")
    st.add_argument("scenario")
    st.add_argument("--out")
    st.add_argument("--strict", action="store_true", help="exit 4 when the verdict is undecided")
    st.set_defaults(func=cmd_stability)

    hx = sub.add_parser("hexagon", help="write the built-in hexagon scenario")
    hx.add_argument("--out")
    hx.set_defaults(func=cmd_hexagon)

    r = sub.add_parser("render", help="draw a report as SVG")
    r.add_argument("report")
    r.add_argument("--svg", required=True)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NonConvergence as exc:
        print(f"did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
