from fractions import Fraction

import mpmath
import pytest

from trigsums.errors import (ArgumentOutOfRange, DivergentSamplePoint, NonIntegerResult, ParityViolation,
                             SingularSamplePoint, UnsupportedGenus)
from trigsums.verlinde import (BlockDimensionQuery, RelationConvention, _integral, dim_twisted, dim_untwisted,
                               dim_untwisted_closed, genfun_check, twisted_relation_holds)


def direct_dimension(g, k, twisted=False, bits=256):
    N = k + 2
    with mpmath.workprec(bits):
        s = mpmath.fsum((-1) ** (n + 1 if twisted else 0) / mpmath.sin(n * mpmath.pi / N) ** (2 * g - 2)
                        for n in range(1, N))
        return (mpmath.mpf(N) / 2) ** (g - 1) * s


@pytest.mark.parametrize("g,k,expected", [(2, 2, 10), (3, 2, 36), (2, 1, 4)])
def test_untwisted_examples(g, k, expected):
    assert dim_untwisted(g, k) == expected


@pytest.mark.parametrize("g,k,expected", [(2, 3, 20), (3, 1, 8)])
def test_closed_examples(g, k, expected):
    assert dim_untwisted_closed(g, k) == expected


@pytest.mark.parametrize("g,k,expected", [(2, 2, 6), (3, 2, 28), (4, 2, 120)])
def test_twisted_examples(g, k, expected):
    assert dim_twisted(g, k) == expected
    assert abs(direct_dimension(g, k, True) - expected) < 1e-60


def test_genus_four_polynomial_agrees():
    for k in range(0, 21):
        assert dim_untwisted_closed(4, k) == dim_untwisted(4, k)
    assert dim_untwisted_closed(4, 1) == 16


@pytest.mark.parametrize("g", [2, 3])
def test_closed_polynomials(g):
    for k in range(0, 21):
        assert dim_untwisted_closed(g, k) == dim_untwisted(g, k)


def test_unsupported_genus():
    with pytest.raises(UnsupportedGenus):
        dim_untwisted_closed(5, 2)


def test_integrality_and_positivity():
    for g in range(2, 7):
        for k in range(1, 21):
            d = dim_untwisted(g, k)
            assert d.denominator == 1 and d > 0
            with mpmath.workprec(256):
                assert abs(direct_dimension(g, k) - d.numerator) < mpmath.mpf(10) ** -50 * d.numerator
            if k % 2 == 0:
                t = dim_twisted(g, k)
                assert t.denominator == 1 and t > 0


def test_integrality_guard():
    with pytest.raises(NonIntegerResult):
        _integral(Fraction(7, 2), "x")


def test_small_genus_and_level():
    assert dim_untwisted(1, 5) == 6
    assert all(dim_untwisted(g, 0) == 1 for g in range(1, 8))


def test_twisted_needs_even_level():
    with pytest.raises(ParityViolation):
        dim_twisted(2, 3)
    with pytest.raises(ParityViolation):
        BlockDimensionQuery(2, 5, twisted=True)
    with pytest.raises(ArgumentOutOfRange):
        dim_twisted(1, 2)


def test_relation_conventions():
    unshifted = [twisted_relation_holds(g, k, RelationConvention.UNSHIFTED)
                 for g in range(2, 6) for k in range(2, 21, 2)]
    printed = [twisted_relation_holds(g, k, RelationConvention.AS_PRINTED)
               for g in range(2, 6) for k in range(4, 21, 2)]
    assert all(unshifted)
    assert not any(printed)


def test_query_object():
    assert BlockDimensionQuery(3, 2).evaluate() == 36
    assert BlockDimensionQuery(3, 2, twisted=True).evaluate() == 28


@pytest.mark.parametrize("k,x", [(4, 0.1), (3, 0.2), (5, 0.05)])
def test_generating_function(k, x):
    report = genfun_check(k, 12, [x])
    assert report.passed
    s = report.samples[0]
    assert s.residual <= s.tail_bound + mpmath.mpf(2) ** -100


def test_generating_function_tail_bound_is_meaningful():
    # with too few terms the residual is large, but still under the bound
    report = genfun_check(5, 2, [0.3])
    s = report.samples[0]
    assert s.residual > 1e-3
    assert s.passed


def test_singular_and_divergent_points():
    with pytest.raises(SingularSamplePoint):
        with mpmath.workprec(256):
            x = mpmath.pi / 4
        genfun_check(4, 12, [x])
    with pytest.raises(DivergentSamplePoint):
        genfun_check(4, 12, [1.2])
    with pytest.raises(ArgumentOutOfRange):
        genfun_check(2, 12, [0.1])
