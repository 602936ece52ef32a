from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trigsums.errors import NonRationalValue
from trigsums.exact import (ONE, SQRT3, TWO_MINUS_ROOT3, QuadraticValue, as_rational, quad_pow,
                            quad_to_rational, reciprocal_factorial, sign_power)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
quads = st.builds(QuadraticValue, rationals, rationals)
nonzero_quads = quads.filter(lambda q: q != 0)


@given(quads, quads, quads)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(nonzero_quads, quads)
def test_division_inverts_multiplication(a, b):
    assert (b * a) / a == b
    assert a * a.inverse() == ONE


@given(quads)
def test_norm_is_product_with_conjugate(a):
    prod = a * a.conjugate()
    assert prod.is_rational
    assert prod.rational_part == a.norm()


def test_sqrt3_squares_to_three():
    assert SQRT3 * SQRT3 == 3


@pytest.mark.parametrize("n", range(0, 65))
def test_unit_powers_cancel(n):
    assert quad_pow(TWO_MINUS_ROOT3, n) * quad_pow(QuadraticValue(2, 1), n) == ONE


def test_negative_power_uses_inverse():
    assert TWO_MINUS_ROOT3 ** -3 == QuadraticValue(2, 1) ** 3


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / QuadraticValue(0, 0)


def test_rational_reduction():
    assert quad_to_rational(QuadraticValue(Fraction(7, 5))) == Fraction(7, 5)
    with pytest.raises(NonRationalValue):
        quad_to_rational(SQRT3)


def test_mixed_arithmetic_with_ints_and_fractions():
    x = Fraction(1, 2) + SQRT3 * 3 - 1
    assert x == QuadraticValue(Fraction(-1, 2), 3)
    assert 2 / QuadraticValue(2) == 1


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational(3) == Fraction(3)


def test_reciprocal_factorial_vanishes_below_zero():
    assert reciprocal_factorial(-1) == 0
    assert reciprocal_factorial(0) == 1
    assert reciprocal_factorial(5) == Fraction(1, 120)


@given(st.integers(-50, 50))
def test_sign_power(n):
    assert sign_power(n) == (-1) ** (n % 2)


def test_float_conversion():
    assert abs(float(TWO_MINUS_ROOT3) - (2 - 3 ** 0.5)) < 1e-15
    assert str(QuadraticValue(1, -2)) == "1 - 2*sqrt(3)"
