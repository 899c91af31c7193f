"""Command controller.

Turns a RunConfig into a report: builds the parameter records, calls the
algebra and service layers under the runtime budget, and renders the
result as JSON or text.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple

import yaml

from ..algebra.coeffring import Coefficient, param_constants
from ..algebra.heckealg import HeckeParams, verify_relations
from ..algebra.laurent import LaurentPoly
from ..constants import (
    DEFAULT_CENTER_DEGREE,
    DEFAULT_CENTER_PANEL_SIZE,
    DEFAULT_SEED,
    DEFAULT_TIMEOUT_SECONDS,
    DEFAULT_WINDOW,
    DEFAULT_WINDOW_LIMIT,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    CaseTag,
    GGCase,
    OutputFormat,
    T0Exponent,
)
from ..errors import ParameterError
from ..infrastructure.config_loader import ConfigManager
from ..infrastructure.logger import logger
from ..schemas.gg_input import GGInput
from ..services.ggdet import determine
from ..services.modules import center_duality, center_panel, classify, gg_type_module, verify_T0_lemma
from ..services.starsolver import StarSolver
from ..utils.threading_utils import run_with_timeout


@dataclass
class RunConfig:
    """Everything one command needs.

    Attributes:
        command: Subcommand name
        case_tag: "A" or "C" (Hecke commands)
        gg_case: "I", "II" or "III" (gg)
        n, t, r, s: Hecke parameters
        alpha, beta: Reducibility points (gg)
        window: (mindeg, maxdeg) for solve-star
        window_limit: Largest accepted window bound
        poly: Polynomial text for classify
        lambda_a: "qt" or "-1"
        sign: +1 or -1 for t0-lemma
        t0_exponent: Spelling of the T_0 prefactor
        annotate: Add the case II renormalization table
        seed, size, degree: Center panel controls
        output_format: text or json
        json_indent: Indentation of JSON output
        timeout_seconds: Runtime budget
    """

    command: str
    case_tag: str = "C"
    gg_case: Optional[str] = None
    n: int = 1
    t: int = 1
    r: int = 0
    s: int = 0
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    window: Tuple[int, int] = DEFAULT_WINDOW
    window_limit: int = DEFAULT_WINDOW_LIMIT
    poly: Optional[str] = None
    lambda_a: str = "qt"
    sign: int = 1
    t0_exponent: T0Exponent = T0Exponent.STANDARD
    annotate: bool = False
    seed: int = DEFAULT_SEED
    size: int = DEFAULT_CENTER_PANEL_SIZE
    degree: int = DEFAULT_CENTER_DEGREE
    output_format: OutputFormat = OutputFormat.TEXT
    json_indent: int = 2
    timeout_seconds: float = DEFAULT_TIMEOUT_SECONDS
    extras: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.lambda_a not in ("qt", "-1"):
            raise ParameterError(f"lambda_A must be 'qt' or '-1', got {self.lambda_a!r}")
        if self.sign not in (1, -1):
            raise ParameterError(f"sign must be +1 or -1, got {self.sign}")
        if self.size < 1 or self.degree < 0:
            raise ParameterError(f"invalid panel: size={self.size}, degree={self.degree}")

    def hecke_params(self) -> HeckeParams:
        case_tag = CaseTag(self.case_tag.upper())
        if case_tag == CaseTag.A:
            return HeckeParams(case_tag, self.n, self.t)
        return HeckeParams(case_tag, self.n, self.t, self.r, self.s, self.t0_exponent)

    def gg_input(self) -> GGInput:
        return GGInput(GGCase((self.gg_case or "").upper()), self.n, self.t, self.alpha, self.beta)

    def lambda_value(self, params: HeckeParams) -> Coefficient:
        return params.constants.qt if self.lambda_a == "qt" else Coefficient.constant(-1)

    @classmethod
    def with_config(cls, config: ConfigManager, **overrides) -> "RunConfig":
        """Config-file values first, then non-None overrides (CLI flags)."""
        values: Dict[str, Any] = {
            "window": tuple(config.get("solver.default_window", list(DEFAULT_WINDOW))),
            "window_limit": config.get("solver.window_limit", DEFAULT_WINDOW_LIMIT),
            "t0_exponent": T0Exponent(config.get("hecke.t0_exponent", T0Exponent.STANDARD.value)),
            "output_format": OutputFormat(config.get("output.format", OutputFormat.TEXT.value)),
            "json_indent": config.get("output.json_indent", 2),
            "seed": config.get("panels.seed", DEFAULT_SEED),
            "size": config.get("panels.center_size", DEFAULT_CENTER_PANEL_SIZE),
            "degree": config.get("panels.center_degree", DEFAULT_CENTER_DEGREE),
            "timeout_seconds": float(config.get("runtime.timeout_seconds", DEFAULT_TIMEOUT_SECONDS)),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


@dataclass
class CommandResult:
    """Exit code and report of one command."""

    exit_code: int
    report: Dict[str, Any]


class CommandController:
    """Dispatch commands to the algebra and service layers."""

    def __init__(self):
        self._handlers: Dict[str, Callable[[RunConfig], CommandResult]] = {
            "verify-relations": self._verify_relations,
            "solve-star": self._solve_star,
            "classify": self._classify,
            "gg": self._gg,
            "t0-lemma": self._t0_lemma,
            "center": self._center,
        }
        logger.debug(f"CommandController initialized: {sorted(self._handlers)}")

    @property
    def commands(self) -> Tuple[str, ...]:
        return tuple(self._handlers)

    def run(self, config: RunConfig) -> CommandResult:
        """Run one command within the configured time budget.

        Raises:
            ParameterError: unknown command or invalid parameters
            TimeoutError: the budget ran out
        """
        handler = self._handlers.get(config.command)
        if handler is None:
            raise ParameterError(f"unknown command {config.command!r}")
        logger.info(f"Running {config.command} (budget {config.timeout_seconds}s)")
        return run_with_timeout(handler, config, timeout=config.timeout_seconds, name=config.command)

    # ----- handlers -----

    def _verify_relations(self, config: RunConfig) -> CommandResult:
        report = verify_relations(config.hecke_params())
        return CommandResult(EXIT_OK if report.all_passed else EXIT_VERIFICATION_FAILED, report.to_dict())

    def _solve_star(self, config: RunConfig) -> CommandResult:
        solver = StarSolver(config.window_limit)
        report = solver.solve(param_constants(config.t, config.r, config.s), config.window)
        return CommandResult(EXIT_OK if report.all_identified else EXIT_VERIFICATION_FAILED, report.to_dict())

    def _classify(self, config: RunConfig) -> CommandResult:
        if not config.poly:
            raise ParameterError("classify needs --poly")
        params = config.hecke_params()
        f = LaurentPoly.parse(config.poly, 1)
        report = classify(f, params, config.lambda_value(params))
        return CommandResult(EXIT_OK, report.to_dict())

    def _gg(self, config: RunConfig) -> CommandResult:
        report = determine(config.gg_input(), annotate=config.annotate)
        return CommandResult(EXIT_OK, report.to_dict())

    def _t0_lemma(self, config: RunConfig) -> CommandResult:
        params = config.hecke_params()
        lambda_A = config.lambda_value(params)
        mu = verify_T0_lemma(params, lambda_A, config.sign)
        expected = params.constants.qs if config.sign > 0 else Coefficient.constant(-1)
        report = {
            "params": params.to_dict(),
            "sign": "+" if config.sign > 0 else "-",
            "lambda_A": lambda_A.to_text(),
            "mu": mu.to_text(),
            "expected": expected.to_text(),
            "matches": mu == expected,
        }
        return CommandResult(EXIT_OK if mu == expected else EXIT_VERIFICATION_FAILED, report)

    def _center(self, config: RunConfig) -> CommandResult:
        params = config.hecke_params()
        module = gg_type_module(params)
        panel = center_panel(params.n, config.size, config.degree, config.seed, signed=params.is_type_c)
        rows = center_duality(module, panel, config.degree)
        mismatches = [f.to_text() for f, central, invariant in rows if central != invariant]
        report = {
            "params": params.to_dict(),
            "panel_size": len(rows),
            "degree": config.degree,
            "seed": config.seed,
            "central": sum(1 for _, central, _ in rows if central),
            "invariant": sum(1 for _, _, invariant in rows if invariant),
            "mismatches": mismatches,
        }
        return CommandResult(EXIT_OK if not mismatches else EXIT_VERIFICATION_FAILED, report)


def render(report: Dict[str, Any], output_format: OutputFormat, json_indent: int = 2) -> str:
    """Deterministic rendering of a report."""
    if output_format == OutputFormat.JSON:
        return json.dumps(report, indent=json_indent, ensure_ascii=False)
    return yaml.safe_dump(report, default_flow_style=False, allow_unicode=True, sort_keys=False).rstrip("\n")


__all__ = ["RunConfig", "CommandResult", "CommandController", "render"]
