from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from trigsums.errors import WindowExceeded, ZeroLeadingCoefficient
from trigsums.series import (ONE_MINUS_V, ONE_PLUS_V, ChebyshevKind, LaurentSeries, binomial,
                             binomial_by_residue, central_binomial_by_residue, central_binomial_series,
                             chebyshev_eval_at_node, default_window, geometric_series, one_plus_power,
                             res, series_inverse, series_residue)


def w_poly(terms):
    return LaurentSeries.from_terms(terms)


def test_residue_of_cube():
    s = (ONE_PLUS_V ** 3).truncate(4)
    assert series_residue(s, 2) == 3


def test_residue_reads_v_minus_one():
    s = LaurentSeries.from_terms({-1: 1, 0: -5, 1: 2})
    assert res(s) == 1


def test_central_binomial_expansion():
    assert series_residue(central_binomial_series(5), 3) == 20


def test_window_is_enforced():
    s = central_binomial_series(5)
    with pytest.raises(WindowExceeded):
        s.coeff(5)


def test_default_window():
    assert default_window(3, 7) == 36


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (4, 7, 0), (6, 3, 20), (3, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected
    assert binomial_by_residue(n, k) == expected


def test_central_binomial_by_residue():
    assert [central_binomial_by_residue(n) for n in range(6)] == [1, 2, 6, 20, 70, 252]


def test_inverse_of_one_minus_v():
    inv = series_inverse(ONE_MINUS_V, order=6)
    assert inv == LaurentSeries([1] * 6, 0, 6)


def test_inverse_with_pole():
    s = ONE_MINUS_V.shift(1)
    inv = s.inverse(order=4)
    assert inv.terms() == {-1: 1, 0: 1, 1: 1, 2: 1, 3: 1}


def test_inverse_of_square():
    s = (ONE_PLUS_V ** 2).truncate(8)
    inv = s.inverse()
    assert [inv.coeff(k) for k in range(5)] == [1, -2, 3, -4, 5]
    assert (s * inv).truncate(8) == LaurentSeries([1], 0, 8)


def test_inverse_needs_leading_coefficient():
    with pytest.raises(ZeroLeadingCoefficient):
        LaurentSeries((), 0, 5).inverse()


def test_exact_inverse_needs_order():
    with pytest.raises(ValueError):
        ONE_MINUS_V.inverse()


def test_truncated_product_window():
    a = geometric_series(1, 5)
    b = LaurentSeries.from_terms({-2: 1})
    assert (a * b).truncation_order == 3


def test_geometric_step():
    g = geometric_series(3, 10)
    assert g.terms() == {0: 1, 3: 1, 6: 1, 9: 1}


@pytest.mark.parametrize("l", range(0, 17))
def test_first_kind_chebyshev_collapses(l):
    s = chebyshev_eval_at_node(ChebyshevKind.FIRST_NORMALIZED, 2 * l).in_w()
    expected = w_poly({-l: 1, l: 1}) if l else w_poly({0: 2})
    assert s == expected


@pytest.mark.parametrize("l", range(0, 17))
def test_second_kind_chebyshev_collapses(l):
    s = chebyshev_eval_at_node(ChebyshevKind.SECOND, 2 * l).in_w()
    assert s == w_poly({j: 1 for j in range(-l, l + 1)})


def test_second_kind_degree_four():
    s = chebyshev_eval_at_node(ChebyshevKind.SECOND, 4).in_w()
    assert s.terms() == {-2: 1, -1: 1, 0: 1, 1: 1, 2: 1}
    assert chebyshev_eval_at_node(ChebyshevKind.SECOND, 0) == LaurentSeries([1])


def test_odd_degree_leaves_half_integer_powers():
    s = chebyshev_eval_at_node(ChebyshevKind.SECOND, 3)
    with pytest.raises(ValueError):
        s.in_w()


def test_chebyshev_window_below_lowest_term():
    with pytest.raises(WindowExceeded):
        chebyshev_eval_at_node(ChebyshevKind.SECOND, 4, window=-4)


@pytest.mark.parametrize("l", range(1, 9))
def test_chebyshev_product_closure(l):
    a = chebyshev_eval_at_node(ChebyshevKind.SECOND, 2 * l - 2, node_power=1)
    b = chebyshev_eval_at_node(ChebyshevKind.SECOND, 2 * l - 2, node_power=2)
    product = (a * b).in_w()
    lhs = product * w_poly({0: 1, 1: -1}) * w_poly({0: 1, 2: -1})
    # w^(3-3l) (1 - w^(2l-1)) (1 - w^(4l-2))
    rhs = w_poly({3 - 3 * l: 1}) * w_poly({0: 1, 2 * l - 1: -1}) * w_poly({0: 1, 4 * l - 2: -1})
    assert lhs == rhs
    # the two terms with a pole are the ones that feed residues against 1/(1-w)
    window = 6 * l + 6
    geo = geometric_series(1, window)
    short = (w_poly({3 - 3 * l: 1, 2 - l: -1}) * geo * geo * geometric_series(2, window))
    assert res(product * geo) == res(short)


@pytest.mark.parametrize("l", range(1, 13))
def test_cubic_pole_residue(l):
    s = one_plus_power(-3, order=max(l, 1)).shift(-(l - 1))
    assert res(s) == (-1) ** l * Fraction(l * (l - 1), 2)


@pytest.mark.parametrize("l", range(1, 13))
def test_quadratic_pole_residue(l):
    s = one_plus_power(-2, order=l).shift(-l)
    assert res(s) == (-1) ** (l + 1) * l


series_strategy = st.builds(
    lambda cs, lo: LaurentSeries(cs, lo, lo + 12),
    st.lists(st.fractions(max_denominator=20), min_size=1, max_size=10),
    st.integers(-4, 4),
)


@given(series_strategy, series_strategy, st.fractions(max_denominator=30), st.fractions(max_denominator=30))
def test_residue_is_linear(a, b, alpha, beta):
    combo = a.scale(alpha) + b.scale(beta)
    try:
        lhs = res(combo)
        ra, rb = res(a), res(b)
    except WindowExceeded:
        return
    assert lhs == alpha * ra + beta * rb


@given(st.integers(0, 30))
def test_binomial_row_by_residue(n):
    row = one_plus_power(n)
    assert [row.coeff(k) for k in range(n + 1)] == [comb(n, k) for k in range(n + 1)]
