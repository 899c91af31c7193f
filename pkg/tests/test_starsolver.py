"""Tests for the (*) solver: catalogue, residual and propagation oracle."""

import pytest

from gghecke.algebra.coeffring import Coefficient, param_constants, v_pow
from gghecke.algebra.laurent import LaurentPoly
from gghecke.constants import FamilyKind
from gghecke.errors import IdentificationError, ParameterError
from gghecke.schemas.solution_family import SolutionFamily
from gghecke.services.starsolver import (
    StarSolver,
    apply_shift,
    catalogue,
    check_star,
    enumerate_solutions,
    excluded_shape_count,
    family_poly,
    identify_family,
    qt_variant_evidence,
    solve_shape,
    star_residual,
)

RS_GRID = [(0, 0), (1, 1), (2, 0), (2, 1), (3, 2)]


def X(d):
    return LaurentPoly.univariate({d: 1})


def fam(label):
    return SolutionFamily.parse(label)


class TestCatalogue:
    def test_closed_forms(self, consts_121):
        print("\n[TEST] Closed forms")
        b, c = consts_121.b, consts_121.c
        assert family_poly(fam("FamIII(0,+)"), consts_121) == LaurentPoly.univariate({0: b, -1: v_pow(3)})
        assert family_poly(fam("FamIII(0,-)"), consts_121) == LaurentPoly.univariate({0: b, -1: -v_pow(1)})
        assert family_poly(fam("ConstMinusOne"), consts_121) == LaurentPoly.univariate({0: -1})
        assert family_poly(fam("FamIV(0,+)"), consts_121) == LaurentPoly.univariate({1: -v_pow(3)})
        assert family_poly(fam("FamV(1)"), consts_121) == LaurentPoly.univariate({1: -c, 2: -consts_121.qr})
        assert family_poly(fam("FamVI(1)"), consts_121) == LaurentPoly.univariate({1: -c, 2: 1})
        assert family_poly(fam("FamI(1)"), param_constants(3, 0, 0)) == X(-2), "b = c = 0 collapses FamI(1)"

    def test_catalogue_window(self):
        labels = [f.label for f in catalogue((0, 1))]
        assert labels == ["ConstMinusOne", "ConstQr", "FamIV(0,+)", "FamIV(0,-)"], labels
        assert len(catalogue((-2, 0))) == 6

    @pytest.mark.parametrize("r, s", RS_GRID)
    def test_every_entry_solves_star(self, r, s):
        consts = param_constants(1, r, s)
        for entry in catalogue((-5, 5)):
            f = family_poly(entry, consts)
            assert check_star(f, consts), f"{entry.label} = {f} fails (*) for r={r}, s={s}"


class TestStar:
    def test_constants(self, consts_121):
        print("\n[TEST] Constant solutions")
        assert check_star(LaurentPoly.univariate({0: -1}), consts_121)
        assert check_star(LaurentPoly.univariate({0: consts_121.qr}), consts_121)
        assert not check_star(LaurentPoly.univariate({0: consts_121.qt}), consts_121), "q^t is not a root when r != t"

    def test_fam_i_two(self, consts_121):
        assert check_star(family_poly(fam("FamI(2)"), consts_121), consts_121)

    def test_residual_requires_one_variable(self, consts_121):
        with pytest.raises(ParameterError):
            star_residual(LaurentPoly.one(2), consts_121)

    def test_shift(self, consts_121):
        print("\n[TEST] X^{2d} f - R_d")
        minus_one = LaurentPoly.univariate({0: -1})
        assert apply_shift(minus_one, 1, consts_121) == family_poly(fam("FamV(1)"), consts_121)
        for d in (1, 2, 3):
            shifted = apply_shift(family_poly(SolutionFamily(FamilyKind.FAM_I, d), consts_121), d, consts_121)
            assert shifted == LaurentPoly.univariate({0: consts_121.qr}), f"FamI({d}) should shift to q^r"
        g = apply_shift(family_poly(fam("FamIII(0,+)"), consts_121), 1, consts_121)
        assert check_star(g, consts_121), "shifts preserve solutions"
        assert g.degree_bounds() == (1, 1), f"got {g}"

    @pytest.mark.parametrize("delta", [Coefficient.constant(1), Coefficient.constant(-1), v_pow(1)])
    def test_perturbations_fail(self, consts_121, delta):
        print(f"\n[TEST] Perturbed solutions, delta={delta}")
        for entry in catalogue((-4, 4)):
            f = family_poly(entry, consts_121)
            for degree in f.univariate_coefficients():
                g = f + X(degree).scale(delta)
                assert not check_star(g, consts_121), f"{entry.label} with X^{degree} moved by {delta} still solves (*)"


class TestIdentification:
    @pytest.mark.parametrize("r, s", RS_GRID)
    def test_identifies_catalogue(self, r, s):
        consts = param_constants(1, r, s)
        for entry in catalogue((-4, 4)):
            f = family_poly(entry, consts)
            assert identify_family(f, consts) == entry, f"{f} misidentified for r={r}, s={s}"

    def test_unknown(self, consts_121):
        with pytest.raises(IdentificationError):
            identify_family(X(-1) + 5, consts_121)
        with pytest.raises(IdentificationError):
            identify_family(LaurentPoly.zero(1), consts_121)
        with pytest.raises(IdentificationError):
            identify_family(X(-1) + X(1), consts_121)


class TestOracle:
    def test_window_minus_two(self, consts_121):
        print("\n[TEST] Oracle on [-2, 0]")
        found = set(enumerate_solutions(consts_121, (-2, 0)))
        expected = {family_poly(fam(label), consts_121) for label in
                    ["ConstMinusOne", "ConstQr", "FamIII(0,+)", "FamIII(0,-)", "FamI(1)", "FamII(1)"]}
        assert found == expected, f"unexpected solutions {found ^ expected}"

    def test_window_zero_one(self, consts_121):
        found = set(enumerate_solutions(consts_121, (0, 1)))
        expected = {family_poly(fam(label), consts_121) for label in
                    ["ConstMinusOne", "ConstQr", "FamIV(0,+)", "FamIV(0,-)"]}
        assert found == expected

    def test_window_zero(self, consts_121):
        found = enumerate_solutions(consts_121, (0, 0))
        assert found == [LaurentPoly.univariate({0: -1}), LaurentPoly.univariate({0: consts_121.qr})]

    def test_degenerate_window(self):
        consts = param_constants(1, 0, 0)
        found = set(enumerate_solutions(consts, (-1, 1)))
        assert found == {X(0) * -1, X(0), X(-1), -X(-1), X(1), -X(1)}, f"got {sorted(map(str, found))}"

    @pytest.mark.parametrize("r, s", RS_GRID)
    def test_matches_catalogue(self, r, s):
        print(f"\n[TEST] Oracle vs catalogue, r={r}, s={s}")
        consts = param_constants(1, r, s)
        for window in [(-3, 0), (0, 3), (-2, 2), (-4, 1)]:
            found = set(enumerate_solutions(consts, window))
            expected = {family_poly(entry, consts) for entry in catalogue(window, consts)}
            assert found == expected, f"window {window}: difference {sorted(map(str, found ^ expected))}"

    def test_deterministic_order(self, consts_121):
        first = [f.to_text() for f in enumerate_solutions(consts_121, (-3, 3))]
        second = [f.to_text() for f in enumerate_solutions(consts_121, (-3, 3))]
        assert first == second

    @pytest.mark.parametrize("window", [(-13, 0), (0, 13), (2, 1)])
    def test_window_limits(self, consts_121, window):
        with pytest.raises(ParameterError):
            enumerate_solutions(consts_121, window)

    def test_excluded_shapes(self):
        assert excluded_shape_count((-4, 0)) == 0
        assert excluded_shape_count((0, 3)) == 3
        assert excluded_shape_count((-2, 3)) == 9

    @pytest.mark.parametrize("r, s", RS_GRID)
    def test_mixed_shapes_have_no_solutions(self, r, s):
        print(f"\n[TEST] Mixed-sign shapes, r={r}, s={s}")
        consts = param_constants(1, r, s)
        for mindeg in range(-3, 0):
            for maxdeg in range(1, 4):
                assert solve_shape(consts, mindeg, maxdeg) == [], f"shape [{mindeg}, {maxdeg}] has a solution"

    @pytest.mark.parametrize("maxdeg", [1, 2, 3])
    def test_positive_shapes_force_zero_constant_term(self, consts_121, maxdeg):
        assignments = solve_shape(consts_121, 0, maxdeg)
        assert assignments, "positive shapes carry the FamIV/FamV/FamVI solutions"
        assert all(not assignment[0] for assignment in assignments), "a_0 must vanish when maxdeg > 0"

    def test_constant_shape(self, consts_121):
        values = [assignment[0] for assignment in solve_shape(consts_121, 0, 0)]
        assert len(values) == 2 and set(values) == {Coefficient.constant(-1), consts_121.qr}

    def test_shape_must_contain_zero(self, consts_121):
        with pytest.raises(ParameterError):
            solve_shape(consts_121, 1, 2)


class TestVariantEvidence:
    def test_qt_spelling_fails_when_r_differs(self, consts_121):
        evidence = qt_variant_evidence(consts_121, (-4, 0))
        assert [item.family for item in evidence] == ["ConstQr", "FamI(1)", "FamI(2)"]
        assert not any(item.holds for item in evidence), "q^t entries should fail (*) when r != t"

    def test_qt_spelling_holds_when_r_equals_t(self):
        consts = param_constants(2, 2, 1)
        assert all(item.holds for item in qt_variant_evidence(consts, (-4, 0)))


class TestStarSolver:
    def setup_method(self):
        self.solver = StarSolver(window_limit=6)

    def test_report(self, consts_121):
        print("\n[TEST] Solver report")
        report = self.solver.solve(consts_121, (-4, 0))
        assert report.count == 10, f"expected 10 solutions, got {report.count}: {report.families}"
        assert report.all_identified
        assert report.excluded_shapes == 0
        assert "ConstQr" in report.families and "FamI(2)" in report.families
        assert report.params["c"] == "v^3 - v"
        assert len(report.notes) == 1, report.notes

    def test_window_limit(self, consts_121):
        with pytest.raises(ParameterError):
            self.solver.solve(consts_121, (-7, 0))

    def test_accepts_hecke_params(self, params_c2, consts_121):
        assert self.solver.solve(params_c2, (0, 0)).to_dict() == self.solver.solve(consts_121, (0, 0)).to_dict()
