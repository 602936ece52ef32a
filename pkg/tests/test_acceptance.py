"""The eight acceptance criteria, each timed against its budget.

Every test appends one PASS/FAIL line to ``conftest.ACCEPTANCE_LINES``;
the terminal summary prints them after the run.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

import mpmath
import pytest

import conftest
from conftest import mp_close
from trigsums import closed_forms as cf
from trigsums import resistor, verlinde
from trigsums.closed_forms import Family, SumSpec, oracle_trig_sum
from trigsums.series import (ChebyshevKind, LaurentSeries, binomial, binomial_by_residue,
                             chebyshev_eval_at_node, one_plus_power, series_residue)

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(number, title, budget=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            ok = False
        limit = f", limit {budget:g} s" if budget is not None else ""
        line = f"criterion {number}: {title}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s{limit})"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
    assert budget is None or elapsed < budget, line


def test_criterion_1_corner_resistance():
    with criterion(1, "2xN corner-to-corner resistance", 10):
        assert [resistor.corner_to_corner_2xN(N) for N in (2, 3, 4)] == [1, Fraction(7, 5), Fraction(15, 8)]
        for N in range(2, 13):
            g = resistor.grid_graph(2, N)
            assert resistor.corner_to_corner_2xN(N) == resistor.laplacian_resistance(g, 0, 2 * N - 1)


def test_criterion_2_kirchhoff_index():
    with criterion(2, "2xN Kirchhoff index", 30):
        assert [resistor.kirchhoff_2xN(N) for N in (2, 3, 4)] == [5, Fraction(71, 5), Fraction(214, 7)]
        k5 = resistor.kirchhoff_2xN(5)
        assert f"{k5.numerator / k5.denominator:.8f}" == "56.10047847"
        for N in range(2, 11):
            exact = resistor.kirchhoff_2xN(N)
            assert exact == resistor.kirchhoff_exact(resistor.grid_graph(2, N))
            with mpmath.workprec(256):
                spectral = resistor.kirchhoff_2xN_spectral(N, 256)
                assert abs(spectral - mpmath.mpf(exact.numerator) / exact.denominator) < mpmath.mpf(2) ** -100


def test_criterion_3_power_polynomials():
    with criterion(3, "T-sum polynomials", 5):
        for N in range(2, 41):
            assert cf.t_m_sum(N, 1) == Fraction(N * N - 1, 3)
            assert cf.t_m_sum(N, 2) == Fraction((N * N - 1) * (N * N + 11), 45)
        for N in range(4, 41, 2):
            assert cf.t_m_twisted(N, 1) == Fraction(N ** 2 + 2, 6)
            assert cf.t_m_twisted(N, 2) == Fraction(7 * N ** 4 + 40 * N ** 2 + 88, 360)
            assert cf.t_m_twisted(N, 3) == Fraction(31 * N ** 6 + 294 * N ** 4 + 1344 * N ** 2 + 3056, 15120)


def test_criterion_4_oracle_sweep():
    tol = mpmath.mpf(2) ** -128
    with criterion(4, "oracle sweep, all families, N <= 20, m <= 5", 120):
        count = 0
        failures = []
        for family in Family:
            for spec in cf.admissible_specs(family, 20, 5):
                report = cf.verify(spec, 256, tol)
                count += 1
                if not report.passed:
                    failures.append(str(spec))
        assert count > 1000
        assert not failures, failures[:10]


def test_criterion_5_verlinde():
    with criterion(5, "Verlinde dimensions and generating function", 30):
        for k in range(0, 21):
            assert verlinde.dim_untwisted(2, k) == Fraction((k + 1) * (k + 2) * (k + 3), 6)
            d = Fraction((k + 1) * (k + 2) * (k + 3), 6)
            assert verlinde.dim_untwisted(3, k) == d * (d + 2 * (k + 2)) / 5
        for g in range(2, 7):
            for k in range(1, 21):
                d = verlinde.dim_untwisted(g, k)
                assert d.denominator == 1 and d > 0
        for k in (3, 4, 5):
            # fractions of pi/k, inside the disc of convergence
            with mpmath.workprec(256):
                angles = [mpmath.pi / k * mpmath.mpf(f) for f in ("0.05", "0.15", "0.3", "0.45")]
            report = verlinde.genfun_check(k, 12, angles)
            assert report.passed
            assert len(report.samples) == 4


def test_criterion_6_scott_sum():
    with criterion(6, "Scott sum and companions"):
        for N in range(2, 21):
            assert cf.odd_inv_sin2_sum(N) == Fraction(N * N, 2)
            assert mp_close(cf.odd_inv_sin2_sum(N), oracle_trig_sum(SumSpec(Family.ODD_INV_SIN2, N)))
            for l in range(1, N + 1):
                value = cf.scott_sum(N, l)
                assert value == Fraction(N * N, 2) - N * l
                assert mp_close(value, oracle_trig_sum(SumSpec(Family.SCOTT_COS, N, l)))
                assert cf.scott_diff_sum(N, l) == N * l
                assert mp_close(N * l, oracle_trig_sum(SumSpec(Family.SCOTT_DIFF, N, l)))
                assert cf.scott_diff_sum(N, l) + value == cf.odd_inv_sin2_sum(N)


def test_criterion_7_residue_engine():
    with criterion(7, "residue engine"):
        for n in range(0, 65):
            for k in range(0, n + 1):
                assert binomial_by_residue(n, k) == binomial(n, k)
        for l in range(0, 17):
            c = chebyshev_eval_at_node(ChebyshevKind.FIRST_NORMALIZED, 2 * l).in_w()
            expected = LaurentSeries.from_terms({-l: 1, l: 1}) if l else LaurentSeries.from_terms({0: 2})
            assert c == expected
            u = chebyshev_eval_at_node(ChebyshevKind.SECOND, 2 * l).in_w()
            assert u == LaurentSeries.from_terms({j: 1 for j in range(-l, l + 1)})
        for l in range(2, 13):
            r = series_residue(one_plus_power(-3, order=l), l - 2)
            assert r == (-1) ** l * Fraction(l * (l - 1), 2)
        for l in range(1, 13):
            r = series_residue(one_plus_power(-2, order=l + 1), l - 1)
            assert r == (-1) ** (l + 1) * l


def test_criterion_8_documented_corrections():
    with criterion(8, "corrected forms vs oracle"):
        # quartic sum: the simplified closed form keeps the factor l(N - l)
        for N in range(2, 13):
            for l in range(0, N + 1):
                fixed = cf.t4_sum_simplified(N, l)
                assert fixed == Fraction(l * (N - l) * (l * (N - l) + 2), 3)
                assert mp_close(fixed, oracle_trig_sum(SumSpec(Family.T4L, N, l)))
        assert not mp_close(cf.t4_sum_as_printed(4, 2), oracle_trig_sum(SumSpec(Family.T4L, 4, 2)))
        # alternating ratio: the boxed table is in the substituted argument
        for N in range(3, 13):
            for arg in range(1, N):
                fixed = cf.s2_sum(N, arg)
                assert fixed == (-arg if (N - arg) % 2 else 0)
                assert mp_close(fixed, oracle_trig_sum(SumSpec(Family.S2, N, arg)))
        assert not mp_close(cf.s2_as_printed(4, 3), oracle_trig_sum(SumSpec(Family.S2, 4, 3)))
        # the degree-six twisted polynomial is T_6^t, not T_4^t
        six = cf.TWISTED_POLYNOMIALS[3]
        for N in range(4, 21, 2):
            assert mp_close(six(N), oracle_trig_sum(SumSpec(Family.TM_TWISTED, N, m=3)))
            assert not mp_close(six(N), oracle_trig_sum(SumSpec(Family.TM_TWISTED, N, m=2)))
