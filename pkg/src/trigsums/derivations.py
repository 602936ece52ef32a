"""Residue-operator derivations of the closed forms.

Each quantity is computed twice where that is instructive: once as the raw
binomial (double) sum that arises from expanding the trigonometric sum, and
once as a formal residue.  The residue routes build their generating
functions with :mod:`trigsums.series`; nothing here uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .closed_forms import _chebyshev_weight
from .errors import ArgumentOutOfRange, ParityViolation
from .exact import reciprocal_factorial, sign_power
from .series import (ChebyshevKind, LaurentSeries, chebyshev_eval_at_node, geometric_series,
                     one_plus_power, res)


def _b(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _w_residue(v_series: LaurentSeries) -> Fraction:
    """Residue in w of a series stored in v (w = v**2)."""
    return res(v_series.in_w())


def _cheb_weight2(l: int, s: int) -> Fraction:
    """(-1)^s 2l/(l+s) C(l+s, l-s); the weight of the binomial sums below."""
    return sign_power(s) * Fraction(2 * l, l + s) * _b(l + s, l - s)


def _res_inverse_one_plus(power: int, shift: int) -> Fraction:
    """res_w 1/((1+w)**power * w**shift)."""
    if shift <= 0:
        return Fraction(0)
    return one_plus_power(-power, order=shift).coeff(shift - 1)


# -- cycle resistance ----------------------------------------------------------

def r1_binomial(N: int, l: int) -> Fraction:
    """(2/N) sum_s (-1)^s 2l/(l+s) C(l+s,l-s) sum_{t=1}^{s-1} (-1)^t C(2(s-1), s-1-t)."""
    total = Fraction(0)
    for s in range(1, l + 1):
        inner = sum(sign_power(t) * _b(2 * (s - 1), s - 1 - t) for t in range(1, s))
        total += _cheb_weight2(l, s) * inner
    return Fraction(2, N) * total


def r1_residue(N: int, l: int) -> Fraction:
    """(-1)^(l+1) (2/N) res_w 1/((1+w)^3 w^(l-1))."""
    return sign_power(l + 1) * Fraction(2, N) * _res_inverse_one_plus(3, l - 1)


def r2_binomial(N: int, l: int) -> Fraction:
    """((N-1)/N) sum_s (-1)^s 2l/(l+s) C(l+s,l-s) C(2(s-1), s-1), sign per the cycle expansion."""
    total = sum(-_cheb_weight2(l, s) * _b(2 * (s - 1), s - 1) for s in range(1, l + 1))
    return Fraction(N - 1, N) * total


def r2_residue(N: int, l: int) -> Fraction:
    """(-1)^(l+1) ((N-1)/N) res_w 1/((1+w)^2 w^l)."""
    return sign_power(l + 1) * Fraction(N - 1, N) * _res_inverse_one_plus(2, l)


def cycle_resistance_by_residue(N: int, l: int) -> Fraction:
    if not 0 <= l <= N:
        raise ArgumentOutOfRange(f"need 0 <= l <= N, got l={l}, N={N}")
    return r1_residue(N, l) + r2_residue(N, l)


# -- T_4(l) ----------------------------------------------------------------------

def t4_quartic_binomial(l: int) -> Fraction:
    """sum_{s=2}^{l} (-1)^(s+1) 2l/(l+s) C(l+s,l-s) sum_{t=1}^{s-2} (-1)^t C(2(s-2), s-2-t)."""
    total = Fraction(0)
    for s in range(2, l + 1):
        inner = sum(sign_power(t) * _b(2 * (s - 2), s - 2 - t) for t in range(1, s - 1))
        total -= _cheb_weight2(l, s) * inner
    return total


def t4_quartic_residue(l: int) -> Fraction:
    """(-1)^l res_w 1/((1+w)^5 w^(l-2)) = -C(l+1, 4).

    The overall sign is (-1)^l; with (-1)^(l+1) the residue has the wrong
    sign for every l >= 3.
    """
    return sign_power(l) * _res_inverse_one_plus(5, l - 2)


def t4_cubic_binomial(l: int) -> Fraction:
    """sum_{s=2}^{l} (-1)^(s+1) 2l/(l+s) C(l+s,l-s) C(2(s-2), s-2)."""
    return sum((-_cheb_weight2(l, s) * _b(2 * (s - 2), s - 2) for s in range(2, l + 1)), Fraction(0))


def t4_cubic_residue(l: int) -> Fraction:
    """(-1)^(l+1) res_w 1/((1+w)^4 w^(l-1)) = -C(l+1, 3)."""
    return sign_power(l + 1) * _res_inverse_one_plus(4, l - 1)


def t4_by_residue(N: int, l: int) -> Fraction:
    if not 0 <= l <= N:
        raise ArgumentOutOfRange(f"need 0 <= l <= N, got l={l}, N={N}")
    return (Fraction(l * l * (N * N - 1), 3) - 8 * t4_quartic_residue(l)
            + 4 * (N - 1) * t4_cubic_residue(l))


# -- tail of T_2m(l) ---------------------------------------------------------------

def t_tail_direct(N: int, l: int, m: int) -> Fraction:
    """1/2 sum_{s=m}^{l} (-1)^(s+1) l/(l+s) C(l+s,l-s) 4^s sum_n sin^(2(s-m))(n pi/N), via power sums."""
    from .power_sums import sin_even_power_sum

    return sum((_chebyshev_weight(l, s) * sin_even_power_sum(N, s - m)
                for s in range(m, l + 1)), Fraction(0)) / 2


def t_tail_binomial(N: int, l: int, m: int) -> Fraction:
    """The tail as two binomial double sums."""
    a = Fraction(0)
    b = Fraction(0)
    for s in range(m, l + 1):
        w = _cheb_weight2(l, s)
        a += w * sum(sign_power(t) * _b(2 * (s - m), s - m - t) for t in range(1, s - m + 1))
        b -= w * _b(2 * (s - m), s - m)
    return 2 ** (2 * m - 1) * a + 2 ** (2 * m - 2) * (N - 1) * b


def t_tail_residue(N: int, l: int, m: int) -> Fraction:
    """(-1)^(l+1) [2^(2m-1) res 1/((1+w)^(2m+1) w^(l-m)) + 2^(2m-2)(N-1) res 1/((1+w)^(2m) w^(l+1-m))]."""
    return sign_power(l + 1) * (2 ** (2 * m - 1) * _res_inverse_one_plus(2 * m + 1, l - m)
                                + 2 ** (2 * m - 2) * (N - 1) * _res_inverse_one_plus(2 * m, l + 1 - m))


def t_tail_factorial(N: int, l: int, m: int) -> Fraction:
    """The factorial form of the tail; 1/n! = 0 for n < 0 makes it vanish for l < m."""
    if l + m - 1 < 0:
        return Fraction(0)
    f = factorial(l + m - 1)
    return (sign_power(m) * 2 ** (2 * m - 1) * f * reciprocal_factorial(l - m - 1) * reciprocal_factorial(2 * m)
            + sign_power(m + 1) * (N - 1) * 2 ** (2 * m - 2) * f
            * reciprocal_factorial(l - m) * reciprocal_factorial(2 * m - 1))


# -- S1 / S2 -----------------------------------------------------------------------

def _U(n: int, node_power: int = 1) -> LaurentSeries:
    return chebyshev_eval_at_node(ChebyshevKind.SECOND, n, node_power=node_power)


def s1_by_residue(N: int, arg: int) -> Fraction:
    """S1(arg) = -2 res U_{2l-2}((1+w)/(2 sqrt w))/(1-w) + (N-1) res U_{2l-2}(...)/w, arg = 2l - 1."""
    if not 1 <= arg <= N - 1:
        raise ArgumentOutOfRange(f"need 1 <= arg <= N-1, got {arg}")
    if arg % 2 == 0:
        return Fraction(0)
    l = (arg + 1) // 2
    u = _U(2 * l - 2)
    window = 2 * (2 * l + 2)
    first = _w_residue(u * geometric_series(2, window))
    second = _w_residue(u.shift(-2))
    return -2 * first + (N - 1) * second


def s2_by_residue(N: int, arg: int) -> Fraction:
    """S2(arg) by residues of 1/(1-w) powers; nonzero only when N - arg is odd."""
    if not 1 <= arg <= N - 1:
        raise ArgumentOutOfRange(f"need 1 <= arg <= N-1, got {arg}")
    if (N - arg) % 2 == 0:
        return Fraction(0)
    window = arg + 4
    g1 = geometric_series(1, window)
    g2 = g1 * g1
    if arg % 2:
        l = (arg + 1) // 2
        return -2 * res(g2.shift(-(l - 1))) - res(g1.shift(-l))
    l = arg // 2
    return -2 * res(g2.shift(-l))


# -- F1 / F2 -----------------------------------------------------------------------

def chebyshev_product(l: int) -> LaurentSeries:
    """U_{2l-2}((1+w)/(2 sqrt w)) * U_{2l-2}((1+w^2)/(2w)), as an exact series in w."""
    return (_U(2 * l - 2, 1) * _U(2 * l - 2, 2)).in_w()


def f1_by_residue(N: int, arg: int) -> Fraction:
    """F1(N, arg, 2) as -2 res AB/(1-w) + (N-1) res AB/w + 2N res AB w^(N-1)/(1-w^N)."""
    if N % 2 == 0:
        raise ParityViolation("F1 needs an odd N")
    if not 1 <= arg <= N - 1:
        raise ArgumentOutOfRange(f"need 1 <= arg <= N-1, got {arg}")
    if arg % 2 == 0:
        return Fraction(0)
    l = (arg + 1) // 2
    ab = _U(2 * l - 2, 1) * _U(2 * l - 2, 2)
    window = 2 * (4 * N + 8)
    t1 = _w_residue(ab * geometric_series(2, window))
    t2 = _w_residue(ab.shift(-2))
    t3 = _w_residue(ab.shift(2 * N - 2) * geometric_series(2 * N, window))
    return -2 * t1 + (N - 1) * t2 + 2 * N * t3


def f2_by_residue(N: int, arg: int) -> Fraction:
    """F2(N, arg, 2) as -2 res A'B'/(sqrt w (1-w)) + 2N res A'B' w^(N/2 - 1)/(1-w^N).

    A'B' uses U_{2l-1}, arg = 2l.  The product of the two U_{2l-1} carries a
    factor sqrt(w)**-1 that the extra sqrt(w) in each term cancels; with
    U_{2l-2} in the first term only half-integer powers survive and the
    residue is identically zero.
    """
    if N % 2 == 0:
        raise ParityViolation("F2 needs an odd N")
    if not 1 <= arg <= N - 1:
        raise ArgumentOutOfRange(f"need 1 <= arg <= N-1, got {arg}")
    if arg % 2:
        return Fraction(0)
    l = arg // 2
    ab = _U(2 * l - 1, 1) * _U(2 * l - 1, 2)
    window = 2 * (4 * N + 8)
    t1 = _w_residue(ab.shift(-1) * geometric_series(2, window))
    t2 = _w_residue(ab.shift(N - 2) * geometric_series(2 * N, window))
    return -2 * t1 + 2 * N * t2
