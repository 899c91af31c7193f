"""Tests for the affine Hecke algebra in the Bernstein presentation."""

import pytest

from gghecke.algebra.coeffring import Coefficient, q_pow, v_pow
from gghecke.algebra.heckealg import (
    HeckeElement,
    HeckeParams,
    gen,
    gen_inverse,
    mul,
    product,
    t0_element,
    verify_relations,
)
from gghecke.algebra.laurent import LaurentPoly
from gghecke.algebra.weyl import SignedPermutation
from gghecke.constants import CaseTag, RelationKind, T0Exponent
from gghecke.errors import ParameterError


def P(text, n):
    return LaurentPoly.parse(text, n)


def E(params, text):
    return HeckeElement.from_poly(params, P(text, params.n))


class TestHeckeParams:
    def test_validation(self):
        print("\n[TEST] Parameter validation")
        with pytest.raises(ParameterError):
            HeckeParams(CaseTag.C, 0, 1)
        with pytest.raises(ParameterError):
            HeckeParams(CaseTag.A, 2, 1, r=1)
        with pytest.raises(ParameterError):
            HeckeParams(CaseTag.C, 2, 1, r=1, s=2)
        with pytest.raises(ParameterError):
            HeckeParams(CaseTag.C, 2, 0)

    def test_string_tags(self):
        params = HeckeParams("c", 2, 1, 2, 1, "halved")
        assert params.case_tag == CaseTag.C and params.t0_exponent == T0Exponent.HALVED
        assert HeckeParams("c", 2, 1, 2, 1, "remark-b").t0_exponent == T0Exponent.HALVED, "alias of halved"

    def test_quadratic_parameters(self, params_c2):
        assert params_c2.quadratic_parameter(0) == q_pow(1), "T_0 has parameter q^s"
        assert params_c2.quadratic_parameter(1) == q_pow(1), "T_1 has parameter q^t"
        assert params_c2.quadratic_parameter(2) == q_pow(2), "T_n has parameter q^r"
        assert params_c2.generator_indices == (0, 1, 2)

    def test_t0_exponent(self):
        assert HeckeParams(CaseTag.C, 2, 1, 2, 1).t0_v_exponent == 5, "s + 2t(n-1) + r"
        assert HeckeParams(CaseTag.C, 2, 1, 2, 1, T0Exponent.HALVED).t0_v_exponent == 4, "s + t(n-1) + r"
        assert HeckeParams(CaseTag.C, 3, 2, 1, 1).t0_v_exponent == 10

    def test_degenerate_flag(self):
        assert HeckeParams(CaseTag.C, 2, 1).is_degenerate
        assert not HeckeParams(CaseTag.A, 2, 1).is_degenerate


class TestMultiplication:
    def test_generators(self, params_a3):
        print("\n[TEST] Generators")
        assert gen(params_a3, 1) == HeckeElement.basis(params_a3, SignedPermutation.simple(3, 1))
        with pytest.raises(ParameterError):
            gen(params_a3, 3)
        with pytest.raises(ParameterError):
            gen(params_a3, 0)

    def test_length_additive_products(self, params_c2):
        s1, s2 = SignedPermutation.simple(2, 1), SignedPermutation.simple(2, 2)
        assert mul(gen(params_c2, 1), gen(params_c2, 2)) == HeckeElement.basis(params_c2, s1 * s2)

    def test_quadratic_relations(self, params_c2, params_a3):
        print("\n[TEST] Quadratic relations")
        for params in (params_c2, params_a3):
            for i in params.finite_indices:
                T = gen(params, i)
                q_i = params.quadratic_parameter(i)
                assert mul(T + 1, T - q_i).is_zero, f"(T{i} + 1)(T{i} - q_i) != 0 for {params}"

    def test_end_node_commutation(self, params_c2):
        print("\n[TEST] T_n X_n rewrite")
        consts = params_c2.constants
        s2 = SignedPermutation.simple(2, 2)
        lhs = mul(gen(params_c2, 2), E(params_c2, "X2"))
        correction = (LaurentPoly.constant(2, consts.b) + P("X2^-1", 2).scale(consts.c)) * P("X2", 2)
        rhs = HeckeElement(params_c2, {s2: P("X2^-1", 2)}) + HeckeElement.from_poly(params_c2, correction)
        assert lhs == rhs, f"T_n X_n = {lhs}"

    def test_type_a_commutation(self, params_a3):
        lhs = mul(gen(params_a3, 1), E(params_a3, "X1"))
        rhs = HeckeElement(params_a3, {SignedPermutation.simple(3, 1): P("X2", 3)}) + E(params_a3, "(q - 1)*X1")
        assert lhs == rhs, f"T_1 X_1 = {lhs}"

    def test_associativity(self, params_c2):
        print("\n[TEST] Associativity")
        s1, s2 = SignedPermutation.simple(2, 1), SignedPermutation.simple(2, 2)
        a = HeckeElement(params_c2, {s1: P("X1", 2), SignedPermutation.identity(2): P("2 + X2^-1", 2)})
        b = HeckeElement(params_c2, {s2: P("X2^-1 - v*X1", 2)})
        c = HeckeElement(params_c2, {s1 * s2: P("X1*X2", 2), s1: P("q", 2)})
        assert mul(mul(a, b), c) == mul(a, mul(b, c)), "(ab)c != a(bc)"

    def test_params_mismatch(self, params_c2, params_c1):
        with pytest.raises(ParameterError):
            mul(gen(params_c2, 1), gen(params_c1, 1))

    def test_operators_and_text(self, params_c2):
        T1 = gen(params_c2, 1)
        assert (T1 * T1) == mul(T1, T1)
        assert (P("X1", 2) * T1).coefficient(SignedPermutation.simple(2, 1)) == P("X1", 2)
        assert T1.to_text() == "T1"
        assert (T1 ** 0) == HeckeElement.one(params_c2)
        assert T1.to_dict()["terms"] == [{"word": [1], "coefficient": "1"}]

    def test_rejects_signed_words_in_case_a(self, params_a3):
        with pytest.raises(ParameterError):
            HeckeElement.basis(params_a3, SignedPermutation((1, 2, -3)))


class TestInverses:
    def test_inverse_relations(self, params_c2):
        print("\n[TEST] Generator inverses")
        one = HeckeElement.one(params_c2)
        for i in params_c2.generator_indices:
            assert mul(gen_inverse(params_c2, i), gen(params_c2, i)) == one, f"T{i}^-1 T{i} != 1"

    def test_degenerate_end_node_is_involution(self):
        params = HeckeParams(CaseTag.C, 2, 1)
        assert gen_inverse(params, 2) == gen(params, 2), "T_n^2 = 1 when r = 0"

    def test_inverse_commutation(self, params_c2):
        lhs = mul(gen_inverse(params_c2, 1), E(params_c2, "X2^-1"))
        rhs = HeckeElement(params_c2, {SignedPermutation.simple(2, 1): P("q^-1*X1^-1", 2)})
        assert lhs == rhs, f"T1^-1 X2^-1 = {lhs}"


class TestT0:
    def test_rank_one_expansion(self, params_c1):
        print("\n[TEST] T_0 for n = 1")
        consts = params_c1.constants
        s1 = SignedPermutation.simple(1, 1)
        expected = HeckeElement(params_c1, {s1: P("v^-1*X", 1), SignedPermutation.identity(1): P("X", 1).scale(-v_pow(-1) * consts.b)})
        assert t0_element(params_c1) == expected, f"T0 = {t0_element(params_c1)}"

    def test_degenerate_rank_one(self):
        params = HeckeParams(CaseTag.C, 1, 1)
        assert gen(params, 0) == HeckeElement(params, {SignedPermutation.simple(1, 1): P("X", 1)})

    @pytest.mark.parametrize("n", [1, 2])
    def test_quadratic(self, n):
        params = HeckeParams(CaseTag.C, n, 1, 2, 1)
        T0 = t0_element(params)
        assert mul(T0 + 1, T0 - params.constants.qs).is_zero, f"(T0 + 1)(T0 - q^s) != 0 for n={n}"

    def test_halved_spelling_breaks_quadratic(self):
        params = HeckeParams(CaseTag.C, 2, 1, 2, 1, T0Exponent.HALVED)
        T0 = t0_element(params)
        assert not mul(T0 + 1, T0 - params.constants.qs).is_zero

    def test_case_a_has_no_t0(self, params_a3):
        with pytest.raises(ParameterError):
            t0_element(params_a3)


class TestVerifyRelations:
    def test_case_a(self, params_a3):
        print("\n[TEST] verify_relations, case A")
        report = verify_relations(params_a3)
        assert report.all_passed, f"failures: {[c.name for c in report.failures]}"
        assert report.get("braid_T1_T2").kind == RelationKind.BRAID

    def test_case_c(self, params_c2):
        print("\n[TEST] verify_relations, case C")
        report = verify_relations(params_c2)
        assert report.all_passed, f"failures: {[c.name for c in report.failures]}"
        names = {check.name for check in report.checks}
        assert {"quadratic_T0", "braid_T0_T1", "braid_T1_T2", "commute_T0_T2", "inverse_T0"} <= names
        assert report.notes == ["T0 prefactor v^5 (standard spelling)"]

    def test_degenerate_case(self):
        params = HeckeParams(CaseTag.C, 2, 1)
        report = verify_relations(params)
        assert report.all_passed
        T0, Tn = gen(params, 0), gen(params, 2)
        assert mul(T0, T0) == HeckeElement.one(params), "T0^2 = 1 when s = 0"
        assert mul(Tn, Tn) == HeckeElement.one(params), "T_n^2 = 1 when r = 0"

    def test_rank_one_has_no_braid(self, params_c1):
        report = verify_relations(params_c1)
        assert report.all_passed
        assert not any(check.kind == RelationKind.BRAID for check in report.checks), "T0, T1 are free in rank one"

    def test_halved_report(self):
        report = verify_relations(HeckeParams(CaseTag.C, 2, 1, 2, 1, T0Exponent.HALVED))
        assert not report.all_passed
        assert not report.get("quadratic_T0").passed
        assert report.get("braid_T0_T1").passed, "braid relations are homogeneous in T0"
        assert report.get("quadratic_T0").difference, "failures carry the difference"
        assert any(note.startswith("failing relations:") for note in report.notes)

    def test_product_helper(self, params_c2):
        T1, T2 = gen(params_c2, 1), gen(params_c2, 2)
        assert product([T1, T2, T1]) == mul(mul(T1, T2), T1)
        with pytest.raises(ValueError):
            product([])
