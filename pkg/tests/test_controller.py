"""Tests for the command controller and report rendering."""

import json
import time
from fractions import Fraction

import pytest
import yaml

from gghecke.algebra.coeffring import param_constants
from gghecke.constants import EXIT_OK, EXIT_VERIFICATION_FAILED, GGCase, OutputFormat, T0Exponent
from gghecke.core.controller import CommandController, RunConfig, render
from gghecke.errors import ParameterError
from gghecke.infrastructure.config_loader import ConfigManager
from gghecke.services.starsolver import catalogue
from gghecke.utils.threading_utils import run_with_timeout


class TestRunConfig:
    def test_config_then_overrides(self, isolated_config):
        config = ConfigManager(isolated_config)
        config.set("panels.seed", 11)
        config.set("output.format", "json")
        run_config = RunConfig.with_config(config, command="center", seed=None, n=2, degree=1)
        assert run_config.seed == 11, "None overrides keep the config value"
        assert run_config.output_format == OutputFormat.JSON
        assert (run_config.n, run_config.degree) == (2, 1)

    def test_gg_input(self):
        run_config = RunConfig("gg", gg_case="iii", n=2, alpha=Fraction(3, 2), beta=Fraction(1, 2))
        inp = run_config.gg_input()
        assert inp.case_tag == GGCase.III and (inp.r, inp.s) == (2, 1)

    def test_hecke_params(self):
        params = RunConfig("verify-relations", case_tag="a", n=3, r=5, s=2).hecke_params()
        assert not params.is_type_c and params.n == 3

    @pytest.mark.parametrize("overrides", [{"lambda_a": "q"}, {"sign": 0}, {"size": 0}, {"degree": -1}])
    def test_invalid(self, overrides):
        with pytest.raises(ParameterError):
            RunConfig("center", **overrides)


class TestCommandController:
    def setup_method(self):
        self.controller = CommandController()

    def test_commands(self):
        assert set(self.controller.commands) == {"verify-relations", "solve-star", "classify", "gg", "t0-lemma", "center"}
        with pytest.raises(ParameterError):
            self.controller.run(RunConfig("factor"))

    def test_verify_relations(self):
        print("\n[TEST] verify-relations exit codes")
        result = self.controller.run(RunConfig("verify-relations", n=1, t=1, r=2, s=1))
        assert result.exit_code == EXIT_OK
        assert result.report["all_passed"] is True

        result = self.controller.run(
            RunConfig("verify-relations", n=2, t=1, r=2, s=1, t0_exponent=T0Exponent.HALVED)
        )
        assert result.exit_code == EXIT_VERIFICATION_FAILED
        assert result.report["t0_exponent"] == "halved"

    def test_solve_star(self):
        result = self.controller.run(RunConfig("solve-star", t=1, r=2, s=1, window=(-1, 1)))
        assert result.exit_code == EXIT_OK
        assert result.report["count"] == len(catalogue((-1, 1), param_constants(1, 2, 1)))

    def test_classify(self):
        result = self.controller.run(RunConfig("classify", n=1, r=2, s=1, poly="-1"))
        assert result.report["subalgebra"] == "H0" and result.report["family"] == "ConstMinusOne"
        with pytest.raises(ParameterError):
            self.controller.run(RunConfig("classify", n=1, r=2, s=1))

    def test_t0_lemma(self):
        result = self.controller.run(RunConfig("t0-lemma", n=2, r=2, s=1, sign=-1, lambda_a="-1"))
        assert result.exit_code == EXIT_OK
        assert result.report["mu"] == "-1" and result.report["matches"] is True

    def test_gg(self):
        result = self.controller.run(RunConfig("gg", gg_case="II", n=2, annotate=True))
        assert result.report["decision"]["rep"]["subalgebra"] == "H0"
        assert len(result.report["annotations"]) == 4

    def test_center(self):
        result = self.controller.run(RunConfig("center", n=2, r=1, s=1, size=8, degree=1, seed=5))
        assert result.exit_code == EXIT_OK
        assert result.report["panel_size"] == 8 and result.report["mismatches"] == []
        assert result.report["central"] == result.report["invariant"]


class TestRender:
    def setup_method(self):
        controller = CommandController()
        self.report = controller.run(RunConfig("gg", gg_case="III", n=2, alpha=Fraction(3, 2), beta=Fraction(1, 2))).report

    def test_json(self):
        text = render(self.report, OutputFormat.JSON, json_indent=4)
        assert json.loads(text) == self.report
        assert render(self.report, OutputFormat.JSON) == render(self.report, OutputFormat.JSON)

    def test_text(self):
        text = render(self.report, OutputFormat.TEXT)
        assert yaml.safe_load(text) == self.report
        assert text.splitlines()[0] == "input:", "keys keep report order"


class TestTimeout:
    def test_budget_exceeded(self):
        with pytest.raises(TimeoutError):
            run_with_timeout(time.sleep, 2.0, timeout=0.05, name="sleeper")

    def test_result_and_errors_pass_through(self):
        assert run_with_timeout(sum, [1, 2, 3], timeout=5.0) == 6
        with pytest.raises(ZeroDivisionError):
            run_with_timeout(lambda: 1 / 0, timeout=5.0)
