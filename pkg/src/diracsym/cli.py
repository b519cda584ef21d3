"""Command-line runner: scenario suites, CSV reports and figures.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 configuration
or I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .checks import run_scenario
from .config import load_config
from .errors import ConfigError

SCENARIOS = ("algebra", "flow", "spin", "planewave", "spectral", "verify-all")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="diracsym",
        description="Run the Dirac symbol-calculus verification suites.",
    )
    p.add_argument("scenario", choices=SCENARIOS)
    p.add_argument("--config", help="JSON configuration file")
    p.add_argument("--out", default="out", help="output directory (default: ./out)")
    p.add_argument("--seed", type=int, default=None, help="override the RNG seed")
    p.add_argument("--tol-scale", type=float, default=None,
                   help="multiply every tolerance by this factor")
    p.add_argument("--part", choices=("electron", "positron", "both"),
                   default="both", help="which branch the plane-wave CSV reports")
    p.add_argument("--no-figures", action="store_true",
                   help="emit delimited data only, skip figure rendering")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config,
                          overrides={"seed": args.seed, "tol_scale": args.tol_scale})
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    try:
        os.makedirs(args.out, exist_ok=True)
    except OSError as exc:
        print(f"cannot create output directory: {exc}", file=sys.stderr)
        return 2

    results, artifacts = run_scenario(args.scenario, cfg, part=args.part)

    from .report import write_artifacts, write_summary

    try:
        write_summary(args.out, args.scenario, results)
        write_artifacts(args.out, artifacts)
        if not args.no_figures and artifacts:
            from .plots import render_all

            render_all(artifacts, args.out)
    except OSError as exc:
        print(f"i/o error while writing reports: {exc}", file=sys.stderr)
        return 2

    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed"
          f" (scenario: {args.scenario}, seed: {cfg.seed})")
    return 0 if not failed else 1


if __name__ == "__main__":
    raise SystemExit(main())
