"""Command-line front end.

Usage:
    python -m gghecke verify-relations --case C --n 2 --t 1 --r 2 --s 1
    python -m gghecke solve-star --r 2 --s 1 --mindeg -4 --maxdeg 0
    python -m gghecke classify --poly "q^2 - 1 - v*X^-1" --n 1 --t 1 --r 2 --s 1
    python -m gghecke gg --gg-case III --n 2 --t 1 --alpha 3/2 --beta 1/2
    python -m gghecke t0-lemma --n 2 --t 1 --r 2 --s 1 --sign -
    python -m gghecke center --n 2 --t 1 --r 1 --s 1 --degree 2
    python -m gghecke init-config --config ./config.yaml
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .constants import (
    DEFAULT_CONFIG_PATH,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
    LOG_LEVELS,
    OutputFormat,
    T0_EXPONENT_ALIASES,
    T0Exponent,
    __version__,
)
from .core.controller import CommandController, RunConfig, render
from .errors import NotASolutionError, ParameterError, ParseError
from .infrastructure.config_loader import ConfigManager
from .infrastructure.logger import log_error_with_context, logger, setup_logger

_USAGE_ERRORS = (ParameterError, ParseError, NotASolutionError)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _sign(text: str) -> int:
    if text in ("+", "+1", "plus"):
        return 1
    if text in ("-", "-1", "minus"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _add_hecke_args(parser: argparse.ArgumentParser, case: bool = True):
    if case:
        parser.add_argument("--case", dest="case_tag", choices=["A", "C"], default=None, help="Root system (default C)")
    parser.add_argument("--n", type=int, default=None, help="Rank")
    parser.add_argument("--t", type=int, default=None, help="Parameter t (default 1)")
    parser.add_argument("--r", type=int, default=None, help="Parameter r (case C)")
    parser.add_argument("--s", type=int, default=None, help="Parameter s (case C)")
    parser.add_argument(
        "--t0-exponent",
        dest="t0_exponent",
        choices=[e.value for e in T0Exponent] + sorted(T0_EXPONENT_ALIASES),
        default=None,
        help="v-exponent spelling of T_0",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gghecke",
        description="Affine Hecke algebras of types A and C, the (*) solver and Gelfand-Graev modules",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None)
    parser.add_argument("--config", type=Path, default=None, help=f"Config file (default {DEFAULT_CONFIG_PATH})")
    parser.add_argument("--log-level", dest="log_level", choices=LOG_LEVELS, default=None)
    parser.add_argument("--timeout", dest="timeout_seconds", type=float, default=None, help="Budget in seconds")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-relations", help="Check the defining relations as element identities")
    _add_hecke_args(p)

    p = sub.add_parser("solve-star", help="Enumerate solutions of (*) in a degree window")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--mindeg", type=int, default=None)
    p.add_argument("--maxdeg", type=int, default=None)
    p.add_argument("--window-limit", dest="window_limit", type=int, default=None)

    p = sub.add_parser("classify", help="Classify the H-structure defined by a solution of (*)")
    p.add_argument("--poly", required=True, help='One-variable polynomial text, e.g. "q^2 - 1 - v*X^-1"; use --poly=TEXT when TEXT starts with a minus')
    _add_hecke_args(p)
    p.add_argument("--lambda-a", dest="lambda_a", choices=["qt", "-1"], default=None)

    p = sub.add_parser("gg", help="Determine the Gelfand-Graev module")
    p.add_argument("--gg-case", dest="gg_case", choices=["I", "II", "III"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--alpha", type=_fraction, default=None)
    p.add_argument("--beta", type=_fraction, default=None)
    p.add_argument("--annotate", action="store_true", default=None, help="Add the case II T_n renormalization table")

    p = sub.add_parser("t0-lemma", help="Eigenvalue of T_0 on g_1")
    _add_hecke_args(p, case=False)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--lambda-a", dest="lambda_a", choices=["qt", "-1"], default=None)

    p = sub.add_parser("center", help="Compare central action with W-invariance on a panel")
    _add_hecke_args(p)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--size", type=int, default=None)

    sub.add_parser("init-config", help="Write the default configuration file")
    return parser


def _run_config(args: argparse.Namespace, config: ConfigManager) -> RunConfig:
    overrides = {
        key: value
        for key, value in vars(args).items()
        if key not in ("config", "log_level", "mindeg", "maxdeg")
    }
    if overrides.get("output_format") is not None:
        overrides["output_format"] = OutputFormat(overrides["output_format"])
    if overrides.get("t0_exponent") is not None:
        overrides["t0_exponent"] = T0Exponent(overrides["t0_exponent"])

    mindeg, maxdeg = getattr(args, "mindeg", None), getattr(args, "maxdeg", None)
    if mindeg is not None or maxdeg is not None:
        default_low, default_high = config.get("solver.default_window", [0, 0])
        overrides["window"] = (
            mindeg if mindeg is not None else default_low,
            maxdeg if maxdeg is not None else default_high,
        )
    return RunConfig.with_config(config, **overrides)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE_ERROR

    config = ConfigManager(args.config)
    setup_logger(
        level=args.log_level or config.get("logging.level"),
        log_dir=Path(config.get("logging.log_dir")) if config.get("logging.log_dir") else None,
        retention_days=config.get("logging.retention_days"),
        max_file_size_mb=config.get("logging.max_file_size_mb"),
    )

    if args.command == "init-config":
        config.save()
        print(config.config_path)
        return EXIT_OK

    try:
        run_config = _run_config(args, config)
        result = CommandController().run(run_config)
    except _USAGE_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except TimeoutError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except Exception as e:
        log_error_with_context(e, f"command {args.command}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED

    print(render(result.report, run_config.output_format, run_config.json_indent))
    return result.exit_code


__all__ = ["build_parser", "main"]
