"""Trigonometric power sums over equally spaced angles.

Two exact routes live here:

* the binomial closed forms in Schwatt's style (``sin_even_power_sum``,
  ``cos_even_power_sum_corrected``, ...), including the extra binomials that
  appear once the binomial index crosses a multiple of N;
* :func:`power_sum_exact`, a character-sum evaluation that expands
  ``cos**p`` / ``sin**p`` in exponentials and sums each frequency over the
  full period.  It is valid for every N and exponent and is used to pin
  down sign conventions of the printed formulas.

Floating point appears only in :func:`oracle_power_sum`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

from .errors import OutOfValidityRange, ParityViolation

DEFAULT_PRECISION_BITS = 256


class Basis(enum.Enum):
    COS = "cos"
    SIN = "sin"


class IndexSet(enum.Enum):
    ALL_RESIDUES = "all"    # n = 1 .. N-1, angle n l pi / N
    ODD_INDICES = "odd"     # n = 1 .. N/2, angle (2n - 1) l pi / N


@dataclass(frozen=True)
class PowerSumKind:
    basis: Basis = Basis.COS
    alternating: bool = False
    index_set: IndexSet = IndexSet.ALL_RESIDUES


def check_precision(bits: int) -> int:
    if not isinstance(bits, int) or bits < 64:
        raise ValueError(f"precision must be at least 64 bits, got {bits!r}")
    return bits


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


# -- character-sum route -----------------------------------------------------

def _period_sum(N: int, c: int, alternating: bool) -> int:
    """Real part of sum_{n=0}^{N-1} (+-1)^n exp(i pi n c / N).

    With c' = c (+ N if alternating) the sum is N when c' = 0 mod 2N, zero for
    other even c', and 2/(1 - exp(i pi c'/N)) for odd c', whose real part is 1.
    Only real parts are kept; the imaginary parts cancel in every combination
    used below (cos**p for all p, sin**p for even p).
    """
    cp = c + N if alternating else c
    if cp % 2:
        return 1
    return N if cp % (2 * N) == 0 else 0


def power_sum_exact(N: int, exponent: int, basis: Basis = Basis.COS,
                    alternating: bool = False) -> Fraction:
    """sum_{n=1}^{N-1} (+-1)^n f(n pi/N)**exponent for f = cos or sin, any N, any exponent."""
    if N < 1:
        raise ValueError("N must be positive")
    p = exponent
    if p < 0:
        raise ValueError("exponent must be non-negative")
    if basis is Basis.SIN and p % 2:
        raise OutOfValidityRange("odd powers of sin give irrational sums (cotangent values)")
    total = Fraction(0)
    for r in range(p + 1):
        weight = comb(p, r)
        if basis is Basis.SIN and r % 2:
            weight = -weight
        total += weight * _period_sum(N, p - 2 * r, alternating)
    if basis is Basis.SIN and (p // 2) % 2:
        total = -total
    total /= 2 ** p
    n0 = 1 if (basis is Basis.COS or p == 0) else 0
    return total - n0


def odd_index_power_sum_exact(N: int, j: int, a: int, basis: Basis = Basis.COS) -> Fraction:
    """sum_{n=1}^{N/2} f((2n-1) a pi / (2N))**(2j) for even N and any integer a.

    Over the odd residues k mod 2N, sum exp(i pi t a k / N) equals
    N (-1)^(t a / N) when N divides t a and vanishes otherwise; the target
    is half of that full sum because cos**2 and sin**2 are even about pi.
    """
    if N < 2 or N % 2:
        raise ParityViolation("odd-index sums need an even N")
    if j < 0:
        raise ValueError("exponent must be non-negative")
    total = Fraction(0)
    for t in range(-j, j + 1):
        ta = t * a
        if ta % N:
            continue
        term = _binom(2 * j, j - t)
        if (ta // N) % 2:
            term = -term
        if basis is Basis.SIN and t % 2:
            term = -term
        total += term
    return Fraction(N, 2 * 4 ** j) * total


# -- Schwatt-style closed forms ----------------------------------------------

def sin_even_power_sum(N: int, q: int) -> Fraction:
    """sum_{n=1}^{N-1} sin(n pi/N)**(2q) from Schwatt's binomial formula (0 <= q < N)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if q < 0:
        raise ValueError("q must be non-negative")
    if q >= N:
        raise OutOfValidityRange(f"Schwatt's sin power formula needs q < N (q={q}, N={N})")
    head = sum((-1) ** (t + 1) * _binom(2 * q, q - t) for t in range(1, q + 1))
    return Fraction(2 * head, 4 ** q) + Fraction((N - 1) * _binom(2 * q, q), 4 ** q)


def schwatt_cos_even_power_sum(N: int, q: int) -> Fraction:
    """Uncorrected Schwatt cosine formula; exact only for q < N."""
    head = sum(_binom(2 * q, q - t) for t in range(1, q + 1))
    return Fraction(-2 * head + (N - 1) * _binom(2 * q, q), 4 ** q)


def cos_even_power_sum_corrected(N: int, J: int, include_corrections: bool = True) -> Fraction:
    """sum_{n=1}^{N-1} cos(n pi/N)**(2J), valid for every J.

    ``-1 + N C(2J,J)/4^J + (2N/4^J) sum_{p=1}^{[J/N]} C(2J, J - pN)``.  The
    p-sum is the correction that the plain Schwatt formula misses once
    J >= N; ``include_corrections=False`` drops it.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if J < 0:
        raise ValueError("J must be non-negative")
    value = Fraction(-1) + Fraction(N * comb(2 * J, J), 4 ** J)
    if include_corrections:
        extra = sum(comb(2 * J, J - p * N) for p in range(1, J // N + 1))
        value += Fraction(2 * N * extra, 4 ** J)
    return value


def sin_odd_index_power_sum(N: int, s: int) -> Fraction:
    """sum_{n=1}^{N/2} sin((2n-1) pi/(2N))**(2(s-1)) for even N.

    The leading term ``2N/2^(2s) C(2(s-1), s-1)`` is complete while
    s - 1 < N; beyond that alternating binomials C(2q, q - pN) enter.
    """
    if N < 2 or N % 2:
        raise ParityViolation("the odd-index sine sum needs an even N")
    if s < 1:
        raise ValueError("s must be at least 1")
    q = s - 1
    value = Fraction(2 * N * comb(2 * q, q), 4 ** s)
    extra = 0
    for p in range(1, q // N + 1):
        extra += (-1) ** p * comb(2 * q, q - p * N)
    return value + Fraction(N * extra, 4 ** q) if extra else value


def cos_odd_index_power_sum(N: int, j: int, l: int) -> Fraction:
    """sum_{n=1}^{N/2} cos((2n-1) l pi/N)**(2j) for even N and any integer l."""
    return odd_index_power_sum_exact(N, j, 2 * l, Basis.COS)


def cos_half_odd_power_sum(N: int, j: int) -> Fraction:
    """sum_{n=1}^{N/2} cos((2n-1) pi/(2N))**(2j) in the split even/odd-p form.

    ``N/2^(2j+1) C(2j,j) + N/2^(2j) [sum_p C(2j, j-2pN) - sum_p C(2j, j-(2p-1)N)]``;
    each p-sum runs while its binomial index stays non-negative.
    """
    if N < 2 or N % 2:
        raise ParityViolation("the odd-index cosine sum needs an even N")
    even = sum(comb(2 * j, j - 2 * p * N) for p in range(1, j // (2 * N) + 1))
    odd = sum(comb(2 * j, j - (2 * p - 1) * N) for p in range(1, (j + N) // (2 * N) + 1))
    return Fraction(N * comb(2 * j, j), 2 ** (2 * j + 1)) + Fraction(N * (even - odd), 4 ** j)


def schwatt_alternating_sin(N: int, q: int) -> Fraction:
    """sum_{n=1}^{N-1} (-1)^n sin(n pi/N)**(2q): even N, q < N/2; zero for odd N."""
    if N % 2:
        return Fraction(0)
    if 2 * q >= N:
        raise OutOfValidityRange("the alternating sine formula needs 2q < N")
    head = sum((-1) ** (t + 1) * _binom(2 * q, q - t) for t in range(1, q + 1))
    return Fraction(2 * head - comb(2 * q, q), 4 ** q)


def schwatt_alternating_cos_even(N: int, q: int) -> Fraction:
    """sum_{n=1}^{N-1} (-1)^n cos(n pi/N)**(2q) for even N, 2q < N.

    The central binomial is C(2q, q); with the index printed as s-l-1 the
    result is wrong for every q >= 1.
    """
    if N % 2:
        raise ParityViolation("this alternating cosine formula is for even N")
    if 2 * q >= N:
        raise OutOfValidityRange("the alternating cosine formula needs 2q < N")
    head = sum(_binom(2 * q, q - t) for t in range(1, q + 1))
    return Fraction(-2 * head - comb(2 * q, q), 4 ** q)


def schwatt_alternating_cos_odd(N: int, q: int, include_corrections: bool = True) -> Fraction:
    """sum_{n=1}^{N-1} (-1)^n cos(n pi/N)**(2q+1) for odd N.

    The main term is -1; the corrections C(2q+1, q - ((2p-1)N - 1)/2)
    switch on once 2q + 1 >= N.
    """
    if N % 2 == 0:
        raise ParityViolation("this alternating odd-power cosine formula is for odd N")
    p_ = 2 * q + 1
    head = sum(_binom(p_, q - t) for t in range(0, q + 1))
    value = Fraction(-2 * head, 2 ** p_)
    if include_corrections:
        extra = 0
        k = 1
        while q - ((2 * k - 1) * N - 1) // 2 >= 0:
            extra += comb(p_, q - ((2 * k - 1) * N - 1) // 2)
            k += 1
        value += Fraction(2 * N * extra, 2 ** p_)
    return value


def alternating_power_sum(N: int, exponent: int, basis: Basis) -> Fraction:
    """sum_{n=1}^{N-1} (-1)^n f(n pi/N)**exponent, exact for every N and exponent.

    Even sine powers vanish identically for odd N; odd sine powers are
    irrational and rejected.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    return power_sum_exact(N, exponent, basis, alternating=True)


# -- oracle ------------------------------------------------------------------

def _mp(x) -> "mpmath.mpf":
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def oracle_power_sum(N: int, exponent: int, kind: PowerSumKind = PowerSumKind(),
                     precision_bits: int = DEFAULT_PRECISION_BITS, l=1):
    """Direct summation at ``precision_bits`` of working precision.

    ``AllResidues`` sums n = 1..N-1 at angle n l pi/N, ``OddIndices`` sums
    n = 1..N/2 at angle (2n-1) l pi/N (l may be a Fraction, e.g. 1/2).
    Rounding error is at most about N * 2**(4 - bits) times the largest term.
    """
    check_precision(precision_bits)
    f = mpmath.cos if kind.basis is Basis.COS else mpmath.sin
    with mpmath.workprec(precision_bits):
        scale = _mp(Fraction(l)) * mpmath.pi / N
        if kind.index_set is IndexSet.ALL_RESIDUES:
            idx = [(n, n) for n in range(1, N)]
        else:
            if N % 2:
                raise ParityViolation("odd-index sums need an even N")
            idx = [(n, 2 * n - 1) for n in range(1, N // 2 + 1)]
        terms = []
        for n, k in idx:
            term = f(k * scale) ** exponent
            if kind.alternating and n % 2:
                term = -term
            terms.append(term)
        return +mpmath.fsum(terms)
