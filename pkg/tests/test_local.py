"""Closed-form local invariants and canonical coefficient tests."""

import pytest
from hypothesis import given, strategies as st

from linesurf import canonical_coefficients, local_invariants
from linesurf.errors import BadMultiplicity
from linesurf.resolution import BLOWN_DOWN_STAR, CHAIN, STAR

rd_pairs = st.integers(min_value=2, max_value=60).flatmap(
    lambda d: st.tuples(st.integers(min_value=2, max_value=d), st.just(d)))


class TestCanonicalCoefficients:
    def test_chain_is_crepant(self):
        cc = canonical_coefficients(2, 6)
        assert cc.shape == CHAIN
        assert cc.values == (0,) * 5

    def test_star_example(self):
        cc = canonical_coefficients(3, 3)
        assert cc.shape == STAR
        assert cc.values == (-1,)
        cc = canonical_coefficients(3, 5)
        assert cc.values[0] == -3 and cc.values[-1] == -1

    def test_blown_down_progression(self):
        cc = canonical_coefficients(3, 7)
        assert cc.shape == BLOWN_DOWN_STAR
        assert cc.values == (-2, -1)
        cc = canonical_coefficients(4, 13)
        assert cc.values == (-6, -4, -2)

    @given(rd_pairs)
    def test_tail_value(self, pair):
        r, d = pair
        cc = canonical_coefficients(r, d)
        if r == 2:
            assert set(cc.values) <= {0}
        elif cc.values:
            assert cc.values[-1] == -(r - 2)

    @given(rd_pairs)
    def test_discrepancies_in_range(self, pair):
        # the singularities are log canonical but not terminal for r >= 3:
        # every coefficient lies in [a_0, 0]
        r, d = pair
        cc = canonical_coefficients(r, d)
        assert all(min(cc.values, default=0) <= v <= 0 for v in cc.values)


class TestLocalInvariants:
    def test_node_row(self):
        for d in range(2, 121):
            inv = local_invariants(2, d)
            assert (inv.dci, inv.dcii) == (0, d - 1)
            assert inv.e == inv.dmy + (d - 1)

    def test_divisible_row(self):
        for r in range(3, 11):
            for d in range(r, 121, r):
                inv = local_invariants(r, d)
                assert inv.dci == -d * (r - 2) ** 2
                assert inv.dcii == d - (r - 1) ** 2

    def test_one_more_row(self):
        for r in range(3, 11):
            for d in range(r + 1, 121, r):
                inv = local_invariants(r, d)
                assert inv.dci == -(d - 1) * (r - 2) ** 2
                assert inv.dcii == d - 1

    def test_one_less_row(self):
        for r in range(3, 11):
            for d in range(2 * r - 1, 121, r):
                inv = local_invariants(r, d)
                assert inv.dci == -d * (r - 2) ** 2 + (2 * r - 5) * (r - 1)
                assert inv.dcii == d + (r - 1) * (r - 2)

    def test_worked_example(self):
        inv = local_invariants(3, 5)
        assert (inv.dci, inv.dcii, inv.dmy, inv.e) == (-3, 7, 24, 24)

    def test_my_consistency(self):
        for r in range(2, 9):
            for d in range(r, 40):
                inv = local_invariants(r, d)
                assert inv.dmy == 3 * inv.dcii - inv.dci
                assert inv.e == inv.dmy + (d - 1) * (r - 1) * (3 - r)

    def test_bounds(self):
        with pytest.raises(BadMultiplicity):
            local_invariants(5, 4)
