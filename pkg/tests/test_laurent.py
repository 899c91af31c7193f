"""Tests for Laurent polynomials, the W_0 action and divided differences."""

import pytest

from gghecke.algebra.coeffring import Coefficient, param_constants, q_pow, v_pow
from gghecke.algebra.laurent import (
    LaurentPoly,
    build_R_d,
    divided_diff_A,
    divided_diff_C,
    eval_character,
    is_W_invariant,
    poly_invert_last,
    poly_swap,
    weyl_act,
)
from gghecke.algebra.weyl import SignedPermutation
from gghecke.errors import NotInvertibleError, ParameterError, ParseError
from gghecke.schemas.character import CharacterSpec


def P(text, n):
    return LaurentPoly.parse(text, n)


def _random_poly(rng, n, terms=4, spread=2):
    f = LaurentPoly.zero(n)
    for _ in range(terms):
        exps = tuple(rng.randint(-spread, spread) for _ in range(n))
        f = f + LaurentPoly.monomial(n, exps, Coefficient.v_pow(rng.randint(-2, 2), rng.randint(-3, 3)))
    return f


class TestRing:
    def test_parse_and_arithmetic(self):
        print("\n[TEST] Parsing and ring operations")
        assert P("X^2 - 1", 1) == (P("X", 1) - 1) * (P("X", 1) + 1), "difference of squares"
        assert P("X1*X2^-1", 2) * P("X2", 2) == P("X1", 2)
        assert P("q*X", 1) == LaurentPoly.monomial(1, (1,), q_pow(1))
        assert P("X^-2", 1) == P("X", 1) ** -2, "negative powers of monomials"
        assert P("(X1 + X2)^2", 2) == P("X1^2 + 2*X1*X2 + X2^2", 2)

    def test_to_text(self):
        print("\n[TEST] Canonical text")
        assert P("X^2 - 1", 1).to_text() == "X^2 - 1"
        assert P("X1*X2^-1 + 3", 2).to_text() == "X1*X2^-1 + 3"
        f = LaurentPoly.univariate({0: v_pow(4) - 1, -1: v_pow(3)})
        assert f.to_text() == "v^4 - 1 + v^3*X^-1", f"got {f.to_text()}"
        assert P(f.to_text(), 1) == f, "text should parse back"
        g = LaurentPoly.univariate({2: v_pow(3) - v_pow(1)})
        assert g.to_text() == "(v^3 - v)*X^2"
        assert P(g.to_text(), 1) == g

    def test_text_round_trip_random(self, rng):
        for n in (1, 2, 3):
            for _ in range(10):
                f = _random_poly(rng, n)
                assert P(f.to_text(), n) == f, f"round trip failed for {f}"

    @pytest.mark.parametrize("text, n", [("X3", 2), ("X", 2), ("Y", 1), ("X +", 1), ("1/(X+1)", 1)])
    def test_parse_errors(self, text, n):
        with pytest.raises(ParseError):
            P(text, n)

    def test_inverse(self):
        assert P("v*X1^2", 2).inverse() == P("v^-1*X1^-2", 2)
        with pytest.raises(NotInvertibleError):
            P("X + 1", 1).inverse()
        with pytest.raises(NotInvertibleError):
            P("(q - 1)*X", 1).inverse()

    def test_mismatched_rank(self):
        with pytest.raises(ParameterError):
            P("X", 1) + P("X1", 2)
        with pytest.raises(ParameterError):
            LaurentPoly.variable(2, 3)

    def test_degree_bounds_and_lift(self):
        f = P("X^2 + X^-3", 1)
        assert f.degree_bounds() == (-3, 2)
        assert f.lift(3, 3) == P("X3^2 + X3^-3", 3)
        assert f.univariate_coefficients() == {2: Coefficient.constant(1), -3: Coefficient.constant(1)}
        with pytest.raises(ValueError):
            LaurentPoly.zero(1).degree_bounds()


class TestWeylAction:
    def test_swap(self):
        print("\n[TEST] f^{s_i}")
        assert poly_swap(P("X1", 2), 1) == P("X2", 2)
        assert poly_swap(P("X1*X2", 2), 1) == P("X1*X2", 2)
        assert poly_swap(P("X1^2*X3", 3), 2) == P("X1^2*X2", 3)
        with pytest.raises(ParameterError):
            poly_swap(P("X1", 2), 2)

    def test_invert_last(self):
        print("\n[TEST] f^v")
        assert poly_invert_last(P("X2", 2)) == P("X2^-1", 2)
        assert poly_invert_last(P("X2 + X2^-1", 2)) == P("X2 + X2^-1", 2)
        assert poly_invert_last(P("X1*X3^2", 3)) == P("X1*X3^-2", 3)

    def test_weyl_act(self):
        f = P("X1 + 2*X2^-1", 2)
        assert weyl_act(SignedPermutation.identity(2), f) == f
        assert weyl_act(SignedPermutation.simple(2, 2), P("X2", 2)) == P("X2^-1", 2)
        w = SignedPermutation.from_word(2, (1, 2))
        assert weyl_act(w, P("X1*X2", 2)) == P("X2*X1^-1", 2), "s1 s2 acting on X1 X2"

    def test_action_is_a_homomorphism(self, rng):
        elements = SignedPermutation.all_elements(2)
        f = _random_poly(rng, 2)
        for u in elements:
            for w in elements:
                assert f.act(u * w) == f.act(w).act(u), f"action of {u} * {w} disagrees"

    def test_coxeter_relations(self, rng):
        print("\n[TEST] Coxeter relations of the operators")
        for _ in range(5):
            f = _random_poly(rng, 3)
            g = f
            for _ in range(3):
                g = g.swap(1).swap(2)
            assert g == f, "(s1 s2)^3 = 1"
            g = f
            for _ in range(4):
                g = g.swap(2).invert_last()
            assert g == f, "(s2 s3)^4 = 1"
            assert f.swap(1).invert_last() == f.invert_last().swap(1), "s1 and s3 commute"
            assert f.swap(1).swap(1) == f and f.invert_last().invert_last() == f, "involutions"


class TestDividedDifferences:
    def test_type_a_examples(self):
        print("\n[TEST] Divided difference, type A")
        assert divided_diff_A(P("X1 + X2", 2), 1).is_zero, "symmetric f has zero divided difference"
        assert divided_diff_A(P("X1", 2), 1) == P("X1", 2)
        assert divided_diff_A(P("X2", 2), 1) == P("-X1", 2)

    def test_type_c_examples(self):
        print("\n[TEST] Divided difference, type C")
        assert divided_diff_C(P("X2 + X2^-1", 2)).is_zero
        assert divided_diff_C(P("X", 1)) == P("X", 1)
        assert divided_diff_C(P("X^-1", 1)) == P("-X", 1)

    def test_defining_identities(self, rng):
        print("\n[TEST] Divided differences times their denominators")
        for _ in range(20):
            f = _random_poly(rng, 2, spread=3)
            ratio = 1 - P("X1^-1*X2", 2)
            assert divided_diff_A(f, 1) * ratio == f - f.swap(1), f"type A identity failed for {f}"
            assert divided_diff_C(f) * (1 - P("X2^-2", 2)) == f - f.invert_last(), f"type C identity failed for {f}"


class TestHelpers:
    def test_build_R_d(self):
        consts = param_constants(1, 2, 1)
        b, c = consts.b, consts.c
        X = P("X", 1)
        assert build_R_d(1, b, c) == X ** 2 * b + X * c
        assert build_R_d(2, b, c) == X ** 4 * b + X ** 3 * c + X ** 2 * b + X * c
        zero = Coefficient()
        assert build_R_d(1, zero, zero).is_zero
        with pytest.raises(ParameterError):
            build_R_d(0, b, c)

    def test_is_W_invariant(self):
        print("\n[TEST] W-invariance")
        assert is_W_invariant(P("X1 + X1^-1 + X2 + X2^-1", 2))
        assert not is_W_invariant(P("X1", 2))
        assert is_W_invariant(LaurentPoly.constant(3, q_pow(1)))
        assert is_W_invariant(P("X1 + X2", 2), signed=False), "symmetric under S_2"
        assert not is_W_invariant(P("X1 + X2", 2)), "not fixed by the sign change"
        assert is_W_invariant(P("X + X^-1", 1)) and not is_W_invariant(P("X", 1)), "rank one has only the sign change"
        assert not is_W_invariant(P("X2 + X2^-1", 2)), "not fixed by the swap"

    def test_eval_character(self):
        print("\n[TEST] Character evaluation")
        chi_pi = CharacterSpec((1, 1), (4, 2))  # t = 1, alpha = 1
        assert eval_character(P("X1*X2^-1", 2), chi_pi) == q_pow(1), "X_i/X_{i+1} acts by q^t"
        chi_minus = CharacterSpec((-1, -1), (3, 1))  # t = 1, beta = 1/2
        assert eval_character(P("X2", 2), chi_minus) == -v_pow(1), "X_n acts by -q^{t beta}"
        assert eval_character(P("X1*X2^-1", 2), chi_minus) == q_pow(1), "signs cancel in the ratio"
        assert eval_character(LaurentPoly.one(2), chi_pi) == 1
        with pytest.raises(ParameterError):
            eval_character(P("X", 1), chi_pi)
