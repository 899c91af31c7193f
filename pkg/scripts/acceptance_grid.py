"""Run the relation, solver and Gelfand-Graev checks over the parameter grid.

Prints one line per grid point and a summary; exits 1 when any point fails.
Optionally writes every report as JSON for inspection.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

from gghecke.constants import EXIT_OK  # noqa: E402
from gghecke.core.controller import CommandController, RunConfig  # noqa: E402
from gghecke.infrastructure.logger import setup_logger  # noqa: E402

RS_GRID = [(0, 0), (1, 1), (2, 0), (2, 1), (3, 2)]
HALVES = [Fraction(1, 2), Fraction(1), Fraction(3, 2)]


def grid_configs(window: int):
    """RunConfigs for every acceptance grid point."""
    for n in (2, 3):
        for t in (1, 2):
            yield RunConfig("verify-relations", case_tag="A", n=n, t=t)
    for n in (1, 2, 3):
        for t in (1, 2):
            for r, s in RS_GRID:
                yield RunConfig("verify-relations", n=n, t=t, r=r, s=s)
                yield RunConfig("t0-lemma", n=n, t=t, r=r, s=s, sign=1)
                yield RunConfig("t0-lemma", n=n, t=t, r=r, s=s, sign=-1, lambda_a="-1")
    for r, s in RS_GRID:
        yield RunConfig("solve-star", r=r, s=s, window=(-window, window))
    for n in (1, 2, 3):
        for t in (1, 2):
            yield RunConfig("gg", gg_case="I", n=n, t=t)
            yield RunConfig("gg", gg_case="II", n=n, t=t)
            for alpha in HALVES:
                for beta in HALVES:
                    if beta <= alpha and (t * (alpha + beta)).denominator == 1:
                        yield RunConfig("gg", gg_case="III", n=n, t=t, alpha=alpha, beta=beta)


def describe(config: RunConfig) -> str:
    if config.command == "gg":
        return f"gg {config.gg_case} n={config.n} t={config.t} alpha={config.alpha} beta={config.beta}"
    if config.command == "solve-star":
        return f"solve-star r={config.r} s={config.s} window={config.window}"
    return f"{config.command} {config.case_tag} n={config.n} t={config.t} r={config.r} s={config.s}"


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(description="gghecke acceptance grid")
    parser.add_argument("--window", type=int, default=6, help="Solver window [-W, W]")
    parser.add_argument("--output", type=Path, default=None, help="Write all reports to this JSON file")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()

    setup_logger(level=args.log_level)
    controller = CommandController()
    reports = []
    failures = 0

    print("=" * 60)
    print("gghecke acceptance grid")
    print("=" * 60)
    for config in grid_configs(args.window):
        result = controller.run(config)
        status = "OK  " if result.exit_code == EXIT_OK else "FAIL"
        failures += result.exit_code != EXIT_OK
        print(f"  {status} {describe(config)}")
        reports.append({"point": describe(config), "exit_code": result.exit_code, "report": result.report})

    print("=" * 60)
    print(f"{len(reports)} points, {failures} failed")

    if args.output is not None:
        args.output.write_text(json.dumps(reports, indent=2, ensure_ascii=False), encoding="utf-8")
        print(f"Reports written to {args.output}")

    sys.exit(0 if failures == 0 else 1)


if __name__ == "__main__":
    main()
