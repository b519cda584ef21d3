"""Check records and deterministic delimited output."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass


@dataclass
class CheckResult:
    """Outcome of one verification: a measured value against its bound."""

    name: str
    value: float
    bound: float

    def __post_init__(self):
        self.value = float(self.value)
        self.bound = float(self.bound)

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.bound)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.value:.6e} <= {self.bound:.6e}"


@dataclass
class Artifact:
    """A named table of plot data: whitespace-free CSV columns."""

    name: str
    header: list
    rows: list
    kind: str = "table"  # hints the figure renderer


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    return repr(float(v))


def write_csv(path: str, header, rows):
    """Plain CSV with '.' decimals, repr-exact floats and LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_summary(out_dir: str, scenario: str, results) -> None:
    write_csv(
        os.path.join(out_dir, f"summary_{scenario}.csv"),
        ["check", "value", "bound", "status"],
        [(r.name, r.value, r.bound, "pass" if r.passed else "fail") for r in results],
    )
    payload = {
        "scenario": scenario,
        "checks": [
            {"name": r.name, "value": r.value, "bound": r.bound, "passed": r.passed}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    with open(os.path.join(out_dir, f"summary_{scenario}.json"), "w",
              encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_artifacts(out_dir: str, artifacts) -> list:
    paths = []
    for art in artifacts:
        path = os.path.join(out_dir, f"{art.name}.csv")
        write_csv(path, art.header, art.rows)
        paths.append(path)
    return paths
