"""Structured verdict records shared by the verification suites and the CLI."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import Iterable, List


@dataclass
class CheckReport:
    """One verified instance: what was checked, the verdict, and a witness.

    Every ``fail`` verdict carries enough witness data to reproduce the
    failure (offending polynomial, multiplier position, element pair, ...).
    """

    suite: str
    instance: str
    verdict: str  # "pass" | "fail" | "error"
    witness: dict = field(default_factory=dict)
    runtime_ms: int = 0

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
            "runtime_ms": self.runtime_ms,
        }
        return json.dumps(payload, sort_keys=True, default=str)


def write_jsonl(reports: Iterable[CheckReport], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json() + "\n")


def write_csv(reports: List[CheckReport], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "instance", "verdict", "runtime_ms"])
        for r in reports:
            writer.writerow([r.suite, r.instance, r.verdict, r.runtime_ms])
