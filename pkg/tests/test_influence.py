from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from data import (
    MINUS_INFINITY,
    Community,
    Influence,
    SubgraphView,
    UndefinedInfluenceError,
    compare_influence,
    influence,
)
from strategies import complete_bipartite

LAYER_SUMS = st.tuples(
    st.integers(0, 2**40 * 2**20),  # weights up to 2^40 over up to 2^20 vertices
    st.integers(1, 2**20),
    st.integers(0, 2**40 * 2**20),
    st.integers(1, 2**20),
)


def reference_sign(a, b):
    """Sign of f(a) - f(b) from the unreduced sums, checked to fit in 256 bits."""
    su_a, nu_a, sv_a, nv_a = a
    su_b, nu_b, sv_b, nv_b = b
    lhs = (su_a * nv_a + sv_a * nu_a) * (nu_b * nv_b)
    rhs = (su_b * nv_b + sv_b * nu_b) * (nu_a * nv_a)
    assert abs(lhs) < 2**255 and abs(rhs) < 2**255
    return (lhs > rhs) - (lhs < rhs)


class TestInfluence:
    def test_equal_layers(self):
        graph = complete_bipartite([2, 4], [3, 3])
        assert influence(SubgraphView.full(graph)) == Influence(6)

    def test_single_edge(self):
        graph = complete_bipartite([5], [7])
        assert str(influence(SubgraphView.full(graph))) == "12"

    def test_unequal_sizes(self):
        value = Influence.from_sums(3, 2, 12, 3)
        assert (value.numerator, value.denominator) == (11, 2)
        assert str(value) == "11/2"

    def test_empty_layer(self, k22):
        view = SubgraphView.induced(k22, [k22.vertex("U", 1)])
        with pytest.raises(UndefinedInfluenceError):
            influence(view)

    def test_reduced_form(self):
        assert Influence(10, 4) == Influence(5, 2)
        assert hash(Influence(10, 4)) == hash(Influence(5, 2))

    def test_fraction_round_trip(self):
        assert Influence.from_fraction(Fraction(7, 3)).to_fraction() == Fraction(7, 3)


class TestCompare:
    def test_equal(self):
        assert compare_influence(Influence(4), Influence(4)) == 0

    def test_less(self):
        assert compare_influence(Influence(11, 2), Influence(6)) == -1

    def test_sentinel_below_zero(self):
        assert compare_influence(MINUS_INFINITY, Influence(0)) == -1
        assert compare_influence(Influence(0), MINUS_INFINITY) == 1
        assert compare_influence(MINUS_INFINITY, MINUS_INFINITY) == 0
        assert str(MINUS_INFINITY) == "-inf"

    @given(LAYER_SUMS, LAYER_SUMS)
    def test_matches_wide_integer_reference(self, a, b):
        value_a = Influence.from_sums(*a)
        value_b = Influence.from_sums(*b)
        assert compare_influence(value_a, value_b) == reference_sign(a, b)


class TestCommunity:
    def test_from_ids_sorts_and_computes(self, k22):
        community = Community.from_ids(k22, [2, 1], [2, 1])
        assert community.upper_ids == (1, 2)
        assert community.influence == Influence(5)
        assert community.size == 4

    def test_issubset(self, k22):
        whole = Community.from_ids(k22, [1, 2], [1, 2])
        part = Community.from_ids(k22, [2], [1, 2])
        assert part.issubset(whole)
        assert not whole.issubset(part)

    def test_record(self, k22):
        record = Community.from_ids(k22, [1], [1, 2]).to_record(1)
        assert record == {
            "rank": 1,
            "influence": "9/2",
            "influence_decimal": 4.5,
            "upper_ids": [1],
            "lower_ids": [1, 2],
        }
