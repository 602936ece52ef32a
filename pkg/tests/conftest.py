from fractions import Fraction

import mpmath
import pytest

ACCEPTANCE_LINES = []


def mp_close(exact, approx, bits=256, tol_bits=None):
    """|exact - approx| < 2**-(tol_bits or bits/2), compared at ``bits`` of precision."""
    with mpmath.workprec(bits):
        e = Fraction(exact)
        diff = abs(mpmath.mpf(e.numerator) / e.denominator - approx)
        return diff < mpmath.mpf(2) ** -(tol_bits or bits // 2)


@pytest.fixture
def close():
    return mp_close


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
