from fractions import Fraction
from math import comb

import pytest

from trigsums import derivations as dv
from trigsums.closed_forms import (cycle_resistance, f1_sum, f2_sum, s1_sum, s2_sum, t4_sum)
from trigsums.errors import ParityViolation
from trigsums.series import ChebyshevKind, chebyshev_eval_at_node, geometric_series, res


@pytest.mark.parametrize("N", range(2, 14))
def test_cycle_resistance_pieces(N):
    for l in range(0, N + 1):
        assert dv.r1_binomial(N, l) == dv.r1_residue(N, l) == Fraction(-l * (l - 1), N)
        assert dv.r2_binomial(N, l) == dv.r2_residue(N, l) == Fraction(l * (N - 1), N)
        assert dv.cycle_resistance_by_residue(N, l) == cycle_resistance(N, l)


@pytest.mark.parametrize("l", range(0, 14))
def test_quartic_pieces(l):
    assert dv.t4_quartic_binomial(l) == dv.t4_quartic_residue(l) == -comb(l + 1, 4)
    assert dv.t4_cubic_binomial(l) == dv.t4_cubic_residue(l) == -comb(l + 1, 3)


def test_quartic_residue_sign():
    # with the opposite overall sign the residue no longer matches the binomial sum
    for l in range(3, 10):
        wrong = -dv.t4_quartic_residue(l)
        assert wrong != dv.t4_quartic_binomial(l)


@pytest.mark.parametrize("N", range(2, 14))
def test_t4_by_residue(N):
    for l in range(0, N + 1):
        assert dv.t4_by_residue(N, l) == t4_sum(N, l)


@pytest.mark.parametrize("N", range(3, 14))
def test_tail_four_ways(N):
    for m in range(1, 6):
        for l in range(m, N):
            forms = {dv.t_tail_direct(N, l, m), dv.t_tail_binomial(N, l, m),
                     dv.t_tail_residue(N, l, m), dv.t_tail_factorial(N, l, m)}
            assert len(forms) == 1


@pytest.mark.parametrize("N", range(2, 16))
def test_s1_s2_by_residue(N):
    for arg in range(1, N):
        assert dv.s1_by_residue(N, arg) == s1_sum(N, arg)
        assert dv.s2_by_residue(N, arg) == s2_sum(N, arg)


@pytest.mark.parametrize("N", range(3, 24, 2))
def test_f1_f2_by_residue(N):
    for arg in range(1, N):
        assert dv.f1_by_residue(N, arg) == f1_sum(N, arg)
        assert dv.f2_by_residue(N, arg) == f2_sum(N, arg)


def test_f_residues_need_odd_n():
    with pytest.raises(ParityViolation):
        dv.f1_by_residue(6, 1)
    with pytest.raises(ParityViolation):
        dv.f2_by_residue(6, 2)


def test_f2_with_even_degree_polynomial_has_no_integer_powers():
    # the lower-degree product leaves only half-integer powers against 1/(sqrt w (1-w))
    for l in range(1, 6):
        a = chebyshev_eval_at_node(ChebyshevKind.SECOND, 2 * l - 2, node_power=1)
        b = chebyshev_eval_at_node(ChebyshevKind.SECOND, 2 * l - 2, node_power=2)
        s = (a * b).shift(-1) * geometric_series(2, 40)
        assert all(e % 2 for e in s.terms())


def test_chebyshev_product_is_pure_w():
    p = dv.chebyshev_product(3)
    assert p.min_exponent == -6
    assert res(p.shift(5)) == 1
