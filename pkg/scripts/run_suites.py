#!/usr/bin/env python3
"""Run every verification suite and write JSONL/CSV reports under reports/.

Usage: python scripts/run_suites.py [--seed K] [--jobs N] [--out DIR]
Exit code 0 iff every instance of every suite passes.
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from latchain.reports import write_csv, write_jsonl
from latchain.suites import SUITE_NAMES, suite_run


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default="reports")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    all_reports = []
    failed = 0
    for name in SUITE_NAMES:
        start = time.monotonic()
        reports = suite_run(name, seed=args.seed, jobs=args.jobs)
        elapsed = time.monotonic() - start
        bad = [r for r in reports if not r.ok]
        failed += len(bad)
        all_reports += reports
        write_jsonl(reports, str(out_dir / f"{name}.jsonl"))
        print(f"{name:15s} {len(reports) - len(bad):4d}/{len(reports):<4d} passed  {elapsed:6.1f}s")
        for r in bad[:5]:
            print(f"    FAIL {r.instance}: {r.witness}")
    write_csv(all_reports, str(out_dir / "summary.csv"))
    print(f"total: {len(all_reports) - failed}/{len(all_reports)} passed")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
