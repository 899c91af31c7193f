"""Tests for signed permutations."""

import pytest

from gghecke.algebra.weyl import SignedPermutation, iter_simple_reflections
from gghecke.errors import ParameterError


class TestSignedPermutation:
    def setup_method(self):
        self.w_c3 = SignedPermutation.all_elements(3)
        self.w_a3 = SignedPermutation.all_elements(3, signed=False)

    def test_group_orders(self):
        print("\n[TEST] Group orders")
        assert len(SignedPermutation.all_elements(1)) == 2
        assert len(SignedPermutation.all_elements(2)) == 8
        assert len(self.w_c3) == 48, "W(C_3) has 2^3 * 3! elements"
        assert len(self.w_a3) == 6

    def test_longest_elements(self):
        assert max(w.length() for w in self.w_c3) == 9, "longest element of W(C_3) has length n^2"
        assert max(w.length() for w in self.w_a3) == 3, "longest element of S_3 has length 3"
        longest = SignedPermutation((-1, -2, -3))
        assert longest.length() == 9, "-1 is the longest element"

    def test_simple_reflections(self):
        for i in iter_simple_reflections(3):
            s = SignedPermutation.simple(3, i)
            assert s.length() == 1, f"s_{i} should have length 1"
            assert (s * s).is_identity, f"s_{i} should be an involution"
            assert s.to_text() == f"T{i}"
        assert SignedPermutation.simple(3, 3).images == (1, 2, -3)
        assert list(iter_simple_reflections(3, signed=False)) == [1, 2]

    def test_reduced_words(self):
        print("\n[TEST] Reduced words")
        for w in self.w_c3:
            word = w.reduced_word()
            assert len(word) == w.length(), f"reduced word of {w} has the wrong length"
            assert SignedPermutation.from_word(3, word) == w, f"word {word} does not spell {w}"

    def test_length_changes_by_one(self):
        for w in self.w_c3:
            for i in range(1, 4):
                delta = (SignedPermutation.simple(3, i) * w).length() - w.length()
                assert abs(delta) == 1, f"l(s_{i} w) - l(w) = {delta} for {w}"

    def test_coxeter_relations(self):
        print("\n[TEST] Coxeter relations")
        assert SignedPermutation.from_word(3, (1, 2) * 3).is_identity, "(s1 s2)^3 = 1"
        assert SignedPermutation.from_word(2, (1, 2) * 4).is_identity, "(s1 s2)^4 = 1 in W(C_2)"
        assert not SignedPermutation.from_word(2, (1, 2) * 2).is_identity, "(s1 s2)^2 != 1 in W(C_2)"
        assert SignedPermutation.from_word(3, (1, 3) * 2).is_identity, "s1 and s3 commute"

    def test_inverse_and_composition(self):
        for w in self.w_c3:
            assert (w * w.inverse()).is_identity
        u, w = self.w_c3[7], self.w_c3[30]
        exps = (2, -1, 3)
        assert (u * w).act_on_exponents(exps) == u.act_on_exponents(w.act_on_exponents(exps))

    def test_identity_text(self):
        assert SignedPermutation.identity(2).to_text() == "1"

    def test_invalid(self):
        with pytest.raises(ParameterError):
            SignedPermutation((1, 1))
        with pytest.raises(ParameterError):
            SignedPermutation.simple(2, 3)
        with pytest.raises(ParameterError):
            SignedPermutation.identity(2) * SignedPermutation.identity(3)
