#!/usr/bin/env python3
"""Scan the inversion-weighted descent polynomials for interlacing failures.

For each n, find the least integer q such that the descent polynomial of
the symmetric group no longer interlaces its q-weighted variant, and
print the exact root-isolation data of the failing polynomial.

Usage: python scripts/counterexample_scan.py [--max-n 5] [--q-max 64]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from latchain.permstats import eulerian, q_eulerian
from latchain.polynomial import interlaces, isolate_real_roots


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--q-max", type=int, default=64)
    args = parser.parse_args()

    for n in range(3, args.max_n + 1):
        base = eulerian(n)
        found = None
        for q in range(1, args.q_max + 1):
            if not interlaces(base, q_eulerian(n, q)):
                found = q
                break
        print(f"n = {n}: descent polynomial {base.to_string()}")
        if found is None:
            print(f"  no interlacing failure up to q = {args.q_max}")
            continue
        weighted = q_eulerian(n, found)
        print(f"  least failing q = {found}")
        print(f"  weighted polynomial: {weighted.to_string()}")
        iso = isolate_real_roots(weighted)
        pretty = ", ".join(f"({a}, {b}]x{m}" for (a, b), m in zip(iso.intervals, iso.multiplicities))
        print(f"  its roots: {pretty}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
