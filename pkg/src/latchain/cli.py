"""Command line interface.

    latchain suite <name> [--instances file] [--seed k] [--jobs n]
                          [--json out.jsonl] [--csv out.csv]
    latchain poly <op> <coeffs...> [--lo r] [--hi r] [--n k] [--at r]
    latchain build <DSL> --out <path>

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
Negative rational flag values need the equals form, e.g. --lo=-1/2.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from .families import build_instance
from .permstats import eulerian, q_eulerian
from .polynomial import (
    ExactPoly,
    diamond_product,
    f_from_h,
    h_from_f,
    interlaces,
    is_real_rooted,
    roots_in_interval,
    sturm_real_root_count,
)
from .posets import Poset, write_poset
from .reports import write_csv, write_jsonl
from .suites import SUITE_NAMES, suite_run
from .tn import RMatrix


def _poly(text: str) -> ExactPoly:
    return ExactPoly.from_string(text)


def _cmd_suite(args: argparse.Namespace) -> int:
    instances = None
    if args.instances:
        with open(args.instances, "r", encoding="utf-8") as fh:
            instances = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    reports = suite_run(args.name, instances=instances, seed=args.seed, jobs=args.jobs)
    for r in reports:
        print(f"{r.verdict.upper():5s} {r.suite} {r.instance} ({r.runtime_ms} ms)")
    passed = sum(1 for r in reports if r.ok)
    print(f"{passed}/{len(reports)} passed")
    if args.json:
        write_jsonl(reports, args.json)
    if args.csv:
        write_csv(reports, args.csv)
    return 0 if passed == len(reports) else 1


def _cmd_poly(args: argparse.Namespace) -> int:
    op = args.op
    ps = [_poly(text) for text in args.coeffs]
    if op == "real-rooted":
        print("true" if is_real_rooted(ps[0]) else "false")
    elif op == "sturm-count":
        interval = None
        if args.lo is not None or args.hi is not None:
            if args.lo is None or args.hi is None:
                raise SystemExit("sturm-count needs both --lo and --hi, or neither")
            interval = (Fraction(args.lo), Fraction(args.hi))
        print(sturm_real_root_count(ps[0], interval))
    elif op == "roots-in-interval":
        if args.lo is None or args.hi is None:
            raise SystemExit("roots-in-interval needs --lo and --hi")
        print("true" if roots_in_interval(ps[0], Fraction(args.lo), Fraction(args.hi)) else "false")
    elif op == "interlaces":
        if len(ps) != 2:
            raise SystemExit("interlaces needs two polynomials: g f")
        print("true" if interlaces(ps[0], ps[1]) else "false")
    elif op == "diamond":
        if len(ps) != 2:
            raise SystemExit("diamond needs two polynomials")
        print(diamond_product(ps[0], ps[1]).to_string())
    elif op == "h-from-f":
        if args.n is None:
            raise SystemExit("h-from-f needs --n")
        print(h_from_f(ps[0], args.n).to_string())
    elif op == "f-from-h":
        if args.n is None:
            raise SystemExit("f-from-h needs --n")
        print(f_from_h(ps[0], args.n).to_string())
    elif op == "eval":
        if args.at is None:
            raise SystemExit("eval needs --at")
        print(ps[0](Fraction(args.at)))
    elif op == "eulerian":
        if args.n is None:
            raise SystemExit("eulerian needs --n")
        print(eulerian(args.n).to_string())
    elif op == "q-eulerian":
        if args.n is None or args.at is None:
            raise SystemExit("q-eulerian needs --n and --at <q>")
        print(q_eulerian(args.n, Fraction(args.at)).to_string())
    else:
        raise SystemExit(f"unknown poly op {op!r}")
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    built = build_instance(args.dsl)
    if isinstance(built, Poset):
        write_poset(built, args.out)
        print(f"wrote poset with {built.n} elements to {args.out}")
    elif isinstance(built, RMatrix):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(built.to_text())
        print(f"wrote {built.order + 1} rank rows to {args.out}")
    else:  # pragma: no cover
        raise SystemExit(f"cannot serialize {type(built).__name__}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="latchain")
    sub = parser.add_subparsers(dest="command", required=True)

    p_suite = sub.add_parser("suite", help="run a verification suite")
    p_suite.add_argument("name", choices=sorted(SUITE_NAMES))
    p_suite.add_argument("--instances", help="file with one DSL instance per line")
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.add_argument("--jobs", type=int, default=1)
    p_suite.add_argument("--json", help="write reports as JSON lines")
    p_suite.add_argument("--csv", help="write a CSV summary")
    p_suite.set_defaults(func=_cmd_suite)

    p_poly = sub.add_parser("poly", help="exact polynomial operations")
    p_poly.add_argument(
        "op",
        choices=[
            "real-rooted",
            "sturm-count",
            "roots-in-interval",
            "interlaces",
            "diamond",
            "h-from-f",
            "f-from-h",
            "eval",
            "eulerian",
            "q-eulerian",
        ],
    )
    p_poly.add_argument("coeffs", nargs="*", help='coefficient lists, e.g. "1 4 5 2"')
    p_poly.add_argument("--lo")
    p_poly.add_argument("--hi")
    p_poly.add_argument("--n", type=int)
    p_poly.add_argument("--at")
    p_poly.set_defaults(func=_cmd_poly)

    p_build = sub.add_parser("build", help="build a family instance and write it out")
    p_build.add_argument("dsl")
    p_build.add_argument("--out", required=True)
    p_build.set_defaults(func=_cmd_build)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
