"""Continued fraction expansion, evaluation, and matrix product tests."""

from math import gcd

import pytest
from hypothesis import given, strategies as st

from linesurf import HJExpansion, TwoByTwo, g_product, hj_evaluate, hj_expand, modular_beta
from linesurf.errors import BetaOutOfRange, NotCoprime, TermTooSmall


def coprime_pairs(max_alpha):
    """Strategy producing coprime (alpha, beta) with 0 < beta < alpha."""
    return (
        st.integers(min_value=2, max_value=max_alpha)
        .flatmap(lambda a: st.tuples(st.just(a), st.integers(min_value=1, max_value=a - 1)))
        .filter(lambda pair: gcd(pair[0], pair[1]) == 1)
    )


class TestExpand:
    def test_small_examples(self):
        assert hj_expand(2, 1).terms == (2,)
        assert hj_expand(3, 1).terms == (3,)
        assert hj_expand(3, 2).terms == (2, 2)
        assert hj_expand(5, 3).terms == (2, 3)
        assert hj_expand(12, 7).terms == (2, 4, 2)
        assert hj_expand(12, 5).terms == (3, 2, 3)

    def test_trivial_pair(self):
        exp = hj_expand(1, 0)
        assert exp == HJExpansion(1, 0, (), (1, 0))
        assert exp.length == 0

    def test_remainder_sequence(self):
        exp = hj_expand(12, 7)
        assert exp.alphas[0] == 12 and exp.alphas[1] == 7
        assert exp.alphas[-2] == 1 and exp.alphas[-1] == 0
        for i, n in enumerate(exp.terms):
            assert exp.alphas[i] == n * exp.alphas[i + 1] - exp.alphas[i + 2]

    def test_rejects_bad_input(self):
        with pytest.raises(BetaOutOfRange):
            hj_expand(5, 0)
        with pytest.raises(BetaOutOfRange):
            hj_expand(5, 5)
        with pytest.raises(NotCoprime):
            hj_expand(6, 4)

    @given(coprime_pairs(500))
    def test_round_trip(self, pair):
        alpha, beta = pair
        exp = hj_expand(alpha, beta)
        assert all(n >= 2 for n in exp.terms)
        assert hj_evaluate(exp.terms) == (alpha, beta)


class TestEvaluate:
    def test_empty_is_one_zero(self):
        assert hj_evaluate(()) == (1, 0)

    def test_known_values(self):
        assert hj_evaluate((2, 2, 2)) == (4, 3)
        assert hj_evaluate((5,)) == (5, 1)

    def test_rejects_small_terms(self):
        with pytest.raises(TermTooSmall):
            hj_evaluate((2, 1))
        with pytest.raises(TermTooSmall):
            hj_evaluate((2.0,))


class TestModularBeta:
    def test_convention_for_alpha_one(self):
        assert modular_beta(1, 1) == 0
        assert modular_beta(1, 7) == 0

    def test_defining_congruence(self):
        for alpha in range(2, 40):
            for bprime in range(1, alpha):
                if gcd(alpha, bprime) != 1:
                    continue
                beta = modular_beta(alpha, bprime)
                assert 0 < beta < alpha
                assert (bprime * beta + 1) % alpha == 0

    def test_rejects_non_coprime(self):
        with pytest.raises(NotCoprime):
            modular_beta(6, 3)
        with pytest.raises(BetaOutOfRange):
            modular_beta(0, 1)


class TestGProduct:
    def test_identity_for_empty(self):
        assert g_product(()) == TwoByTwo.identity()

    @given(st.lists(st.integers(min_value=2, max_value=6), max_size=12))
    def test_determinant_one_and_first_column(self, terms):
        g = g_product(terms)
        assert g.det() == 1
        alpha, beta = hj_evaluate(terms)
        assert (g.a, g.c) == (alpha, beta)

    def test_second_column_from_modular_inverse(self):
        # when beta is the modular datum for (alpha, b'), the second column
        # is (b' - alpha, (1 + b' beta)/alpha - beta)
        for alpha in range(2, 30):
            for bprime in range(1, alpha):
                if gcd(alpha, bprime) != 1:
                    continue
                beta = modular_beta(alpha, bprime)
                g = g_product(hj_expand(alpha, beta).terms)
                assert g.b == bprime - alpha
                assert g.d == (1 + bprime * beta) // alpha - beta
