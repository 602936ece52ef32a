"""Closed forms for the named trigonometric sums and their direct-summation oracles.

Every evaluator returns an exact :class:`~fractions.Fraction`.  Sums are
identified by a :class:`SumSpec`; :func:`verify` evaluates the closed form,
sums the defining series at high precision and compares the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Optional

import mpmath

from .errors import ArgumentOutOfRange, ParityViolation, TrigSumError
from .exact import reciprocal_factorial, sign_power
from .power_sums import DEFAULT_PRECISION_BITS, check_precision, sin_even_power_sum


class Family(enum.Enum):
    CYCLE_R = "cycle-r"
    PATH_F = "path-f"
    SCOTT_COS = "scott-cos"
    SCOTT_DIFF = "scott-diff"
    INV_SIN2 = "inv-sin2"
    ODD_INV_SIN2 = "odd-inv-sin2"
    T4L = "t4l"
    TML = "tml"
    TM = "tm"
    TML_TWISTED = "tml-twisted"
    TM_TWISTED = "tm-twisted"
    SL = "sl"
    S1 = "s1"
    S2 = "s2"
    F1 = "f1"
    F2 = "f2"


_NEEDS_L = {Family.CYCLE_R, Family.PATH_F, Family.SCOTT_COS, Family.SCOTT_DIFF, Family.T4L,
            Family.TML, Family.TML_TWISTED, Family.SL, Family.S1, Family.S2, Family.F1, Family.F2}
_NEEDS_M = {Family.TML, Family.TM, Family.TML_TWISTED, Family.TM_TWISTED}
_EVEN_N = {Family.TML_TWISTED, Family.TM_TWISTED, Family.SL}
_ODD_N = {Family.F1, Family.F2}


def _l_range(family: Family, N: int) -> range:
    if family is Family.SCOTT_COS:
        return range(1, N + 1)
    if family in (Family.S1, Family.S2, Family.F1, Family.F2):
        return range(1, N)
    return range(0, N + 1)


def _check_N(N: int, minimum: int = 2) -> None:
    if not isinstance(N, int) or N < minimum:
        raise ArgumentOutOfRange(f"N must be an integer >= {minimum}, got {N!r}")


def _check_l(N: int, l: int, lo: int, hi: int) -> None:
    if not isinstance(l, int) or not lo <= l <= hi:
        raise ArgumentOutOfRange(f"l must satisfy {lo} <= l <= {hi} for N={N}, got {l!r}")


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ArgumentOutOfRange(f"m must be a positive integer, got {m!r}")


def _check_even(N: int, what: str) -> None:
    if N % 2:
        raise ParityViolation(f"{what} needs an even N, got N={N}")


def _check_odd(N: int, what: str) -> None:
    if N % 2 == 0:
        raise ParityViolation(f"{what} needs an odd N, got N={N}")


def _chebyshev_weight(l: int, s: int) -> Fraction:
    """(-1)^(s+1) l/(l+s) C(l+s, l-s) 4^s, so that sin^2(l x) = 1/2 sum_s weight * sin(x)^(2s)."""
    if s > l or l + s == 0:
        return Fraction(0)
    return sign_power(s + 1) * Fraction(l, l + s) * comb(l + s, l - s) * 4 ** s


# -- cycle and path ------------------------------------------------

def cycle_resistance(N: int, l: int) -> Fraction:
    """Two-point resistance l(N - l)/N of the N-cycle."""
    _check_N(N)
    _check_l(N, l, 0, N)
    return Fraction(l * (N - l), N)


def path_sum(N: int, l: int) -> Fraction:
    """F_N(l) = (1/N) sum (1 - cos(n l pi/N))/(1 - cos(n pi/N)) = l - (l^2/2 + (1 - (-1)^l)/4)/N."""
    _check_N(N)
    _check_l(N, l, 0, N)
    return l - (Fraction(l * l, 2) + Fraction(1 - sign_power(l), 4)) / N


def odd_index_path_sum(N: int, l: int) -> Fraction:
    """(1/N) sum_{n=1}^{N/2} (1 - cos((2n-1) l pi/N))/(1 - cos((2n-1) pi/N)) = l/2, N even."""
    _check_N(N)
    _check_even(N, "the half-range odd-index sum")
    _check_l(N, l, 0, N)
    return Fraction(l, 2)


# -- Scott / Minc --------------------------------------------------

def scott_sum(N: int, l: int) -> Fraction:
    """sum_{n=1}^{N} cos((2n-1) l pi/N)/(1 - cos((2n-1) pi/N)) = N^2/2 - N l."""
    _check_N(N, 1)
    _check_l(N, l, 1, N)
    return Fraction(N * N, 2) - N * l


def scott_diff_sum(N: int, l: int) -> Fraction:
    """sum_{n=1}^{N} (1 - cos((2n-1) l pi/N))/(1 - cos((2n-1) pi/N)) = N l."""
    _check_N(N, 1)
    _check_l(N, l, 0, N)
    return Fraction(N * l)


def odd_inv_sin2_sum(N: int) -> Fraction:
    """sum_{n=1}^{N} 1/(1 - cos((2n-1) pi/N)) = N^2/2."""
    _check_N(N, 1)
    return Fraction(N * N, 2)


def inv_sin2_sum(N: int) -> Fraction:
    """sum_{n=1}^{N-1} 1/sin^2(n pi/N) = (N^2 - 1)/3."""
    _check_N(N)
    return Fraction(N * N - 1, 3)


# -- T-sums ---------------------------------------------------------

def t4_sum(N: int, l: int) -> Fraction:
    """sum sin^2(n l pi/N)/sin^4(n pi/N) in the unsimplified residue form."""
    _check_N(N)
    _check_l(N, l, 0, N)
    return (Fraction(l * l * (N * N - 1), 3)
            + Fraction((l + 1) * l * (l - 1) * (l - 2), 3)
            - Fraction(2 * (N - 1) * (l + 1) * l * (l - 1), 3))


def t4_sum_simplified(N: int, l: int) -> Fraction:
    """l^2 (N-l)^2/3 + 2 l (N-l)/3, the factored form of :func:`t4_sum`."""
    _check_N(N)
    _check_l(N, l, 0, N)
    k = l * (N - l)
    return Fraction(k * k + 2 * k, 3)


def t4_sum_as_printed(N: int, l: int) -> Fraction:
    """The simplification l^2 (N-l)^2/3 + 2 (N-l)/3 exactly as printed; wrong unless l in {0, 1}
    or l = N.  Kept so the discrepancy stays under test."""
    return Fraction(l * l * (N - l) ** 2, 3) + Fraction(2 * (N - l), 3)


@lru_cache(maxsize=None)
def _t_m(N: int, m: int) -> Fraction:
    if m == 0:
        return Fraction(N - 1)
    first = Fraction(0)
    for s in range(1, m):
        weight = sum(_chebyshev_weight(l, s) for l in range(1, N))
        if weight:
            first += weight * _t_m(N, m - s)
    first /= N
    tail = (sign_power(m + 1) * 2 ** (2 * m - 1) * Fraction(factorial(N + m - 1), N * factorial(2 * m + 1))
            * reciprocal_factorial(N - m - 1) * (2 * m * N + 1 - N))
    return first + tail


def t_m_sum(N: int, m: int) -> Fraction:
    """T_2m = sum_{n=1}^{N-1} 1/sin^(2m)(n pi/N) by the recursion in m.

    The closed tail carries 1/(N-m-1)!, read as zero once m >= N; the
    recursion then stays exact (checked against direct summation).
    """
    _check_N(N)
    _check_m(m)
    return _t_m(N, m)


def _t_ml_recursion(N: int, l: int, m: int) -> Fraction:
    first = Fraction(0)
    for s in range(1, m):
        w = _chebyshev_weight(l, s)
        if w:
            first += w * _t_m(N, m - s)
    tail = Fraction(0)
    if l >= m:
        tail = (sign_power(m + 1) * 2 ** (2 * m - 1)
                * Fraction(factorial(l + m - 1), factorial(l - m) * factorial(2 * m)) * (m * N - l))
    return first / 2 + tail


def t_ml_expansion(N: int, l: int, m: int) -> Fraction:
    """T_2m(l) by expanding sin^2(l x) in powers of sin^2 x and summing every power exactly.

    Terms with s < m give T_2(m-s); terms with s >= m give Schwatt power sums.
    Valid for every 0 <= l <= N, including l < m where the closed tail of
    the recursion has no factorial meaning.
    """
    _check_N(N)
    _check_l(N, l, 0, N)
    _check_m(m)
    total = Fraction(0)
    for s in range(1, l + 1):
        w = _chebyshev_weight(l, s)
        if s < m:
            total += w * _t_m(N, m - s)
        else:
            total += w * sin_even_power_sum(N, s - m)
    return total / 2


def t_ml_sum(N: int, l: int, m: int) -> Fraction:
    """T_2m(l) = sum sin^2(n l pi/N)/sin^(2m)(n pi/N).

    For l >= m this is the recursion over T_2k with the closed factorial
    tail; for l < m (outside the recursion domain) it falls back to
    :func:`t_ml_expansion`.
    """
    _check_N(N)
    _check_l(N, l, 0, N)
    _check_m(m)
    if l < m:
        return t_ml_expansion(N, l, m)
    return _t_ml_recursion(N, l, m)


@lru_cache(maxsize=None)
def _t_m_twisted(N: int, m: int) -> Fraction:
    if m == 0:
        return Fraction(1)
    h = N // 2
    first = Fraction(0)
    for s in range(1, m):
        w = _chebyshev_weight(h, s)
        if w:
            first += w * _t_m_twisted(N, m - s)
    tail = Fraction(0)
    if h >= m:
        tail = (sign_power(m + 1) * 2 ** (2 * m)
                * Fraction(factorial(h + m - 1), factorial(h - m) * factorial(2 * m)) * h)
    return first + tail - _t_m(N, m)


def t_m_twisted(N: int, m: int) -> Fraction:
    """T^t_2m = sum (-1)^(n+1)/sin^(2m)(n pi/N), N even, from the l = N/2 twisted recursion."""
    _check_N(N)
    _check_even(N, "the twisted sum")
    _check_m(m)
    return _t_m_twisted(N, m)


def t_ml_twisted(N: int, l: int, m: int) -> Fraction:
    """T^t_2m(l) = sum (-1)^(n+1) sin^2(n l pi/N)/sin^(2m)(n pi/N), N even.

    The sum is symmetric under l -> N - l, so it is evaluated at
    min(l, N - l) <= N/2, where the twisted power sums reduce to one term.
    """
    _check_N(N)
    _check_even(N, "the twisted sum")
    _check_l(N, l, 0, N)
    _check_m(m)
    l = min(l, N - l)
    first = Fraction(0)
    for s in range(1, m):
        w = _chebyshev_weight(l, s)
        if w:
            first += w * _t_m_twisted(N, m - s)
    tail = Fraction(0)
    if l >= m:
        tail = (sign_power(m + 1) * 2 ** (2 * m - 1)
                * Fraction(factorial(l + m - 1), factorial(l - m) * factorial(2 * m)) * l)
    return first / 2 + tail


TWISTED_POLYNOMIALS = {
    1: lambda N: Fraction(N ** 2 + 2, 6),
    2: lambda N: Fraction(7 * N ** 4 + 40 * N ** 2 + 88, 360),
    # printed under the label T_4^t; it is the degree-6 sum T_6^t
    3: lambda N: Fraction(31 * N ** 6 + 294 * N ** 4 + 1344 * N ** 2 + 3056, 15120),
}

UNTWISTED_POLYNOMIALS = {
    1: lambda N: Fraction(N ** 2 - 1, 3),
    2: lambda N: Fraction((N ** 2 - 1) * (N ** 2 + 11), 45),
}


# -- number-theoretic sums -----------------------------------------

def s_sum(N: int, l: int) -> Fraction:
    """S(l) = sum (-1)^n sin^2(n l pi/N)/sin^2(n pi/N) = -min(l, N-l)^2 for even N."""
    _check_N(N)
    _check_even(N, "S(l)")
    _check_l(N, l, 0, N)
    k = min(l, N - l)
    return Fraction(-k * k)


def s1_sum(N: int, l: int) -> Fraction:
    """S1(l) = sum sin(n l pi/N)/sin(n pi/N): N - l for odd l, 0 for even l."""
    _check_N(N)
    _check_l(N, l, 1, N - 1)
    return Fraction(N - l) if l % 2 else Fraction(0)


def s2_sum(N: int, l: int) -> Fraction:
    """S2(l) = sum (-1)^n sin(n l pi/N)/sin(n pi/N) = -S1(N - l).

    Equals -l when N - l is odd and 0 otherwise.
    """
    _check_N(N)
    _check_l(N, l, 1, N - 1)
    return -Fraction(l) if (N - l) % 2 else Fraction(0)


def s2_as_printed(N: int, k: int) -> Fraction:
    """Theorem-box table for S2 read literally with argument k; disagrees with the sum.

    The entries -(2l-1) and -2l belong to the substituted arguments
    2l - 1 and 2l, which is why the literal reading fails.
    """
    if k % 2 and N % 2 == 0:
        return Fraction(-(2 * k - 1))
    if k % 2 == 0 and N % 2:
        return Fraction(-2 * k)
    return Fraction(0)


def f1_sum(N: int, arg: int) -> Fraction:
    """F1(N, arg, 2) = sum [sin(n a pi/N)/sin(n pi/N)][sin(2n a pi/N)/sin(2n pi/N)], N odd.

    Zero for even ``arg``; for odd ``arg`` the closed form is evaluated at
    l = (arg + 1)/2, the N-proportional term entering only when 3l - 2 > N.
    """
    _check_N(N, 3)
    _check_odd(N, "F1")
    _check_l(N, arg, 1, N - 1)
    if arg % 2 == 0:
        return Fraction(0)
    l = (arg + 1) // 2
    value = (-Fraction((3 * l - 2) * (3 * l - 3), 2) + Fraction((l - 1) * (l - 2), 2) - l
             + Fraction(1 - sign_power(l), 2) + Fraction((N - 1) * (2 * l - 1 - sign_power(l)), 2))
    if 3 * l - 2 > N:
        value += N * (3 * l - 2 - N + Fraction(1 - sign_power(l - N), 2))
    return value


def f2_sum(N: int, arg: int) -> Fraction:
    """F2(N, arg, 2), the (-1)^n weighted F1; zero for odd ``arg``, closed form at l = arg/2."""
    _check_N(N, 3)
    _check_odd(N, "F2")
    _check_l(N, arg, 1, N - 1)
    if arg % 2:
        return Fraction(0)
    l = arg // 2
    h = (N + 1) // 2
    value = -Fraction(3 * l * (3 * l - 1), 2) + Fraction(l * (l - 1), 2) - l
    if 3 * l > h:
        value += N * (3 * l - h + Fraction(1 - sign_power(l - h), 2))
    return value


# -- specs, oracles, verification ----------------------------------------------

@dataclass(frozen=True)
class SumSpec:
    family: Family
    N: int
    l: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))

    @property
    def flags(self) -> dict:
        out = {"N_even": self.N % 2 == 0}
        if self.l is not None:
            out["l_even"] = self.l % 2 == 0
        if self.family is Family.TML and self.l is not None and self.m is not None:
            out["outside_recursion_domain"] = self.l < self.m
        return out

    def validate(self) -> None:
        """Raise the domain error that evaluating this spec would raise."""
        f = self.family
        if f in _NEEDS_L and self.l is None:
            raise ArgumentOutOfRange(f"{f.value} needs l")
        if f in _NEEDS_M and self.m is None:
            raise ArgumentOutOfRange(f"{f.value} needs m")
        _check_N(self.N, 3 if f in _ODD_N else 2)
        if f in _EVEN_N:
            _check_even(self.N, f.value)
        if f in _ODD_N:
            _check_odd(self.N, f.value)
        if f in _NEEDS_L:
            r = _l_range(f, self.N)
            _check_l(self.N, self.l, r.start, r.stop - 1)
        if f in _NEEDS_M:
            _check_m(self.m)

    @property
    def admissible(self) -> bool:
        try:
            self.validate()
        except TrigSumError:
            return False
        return True

    def to_dict(self) -> dict:
        d = {"family": self.family.value, "N": self.N}
        if self.l is not None:
            d["l"] = self.l
        if self.m is not None:
            d["m"] = self.m
        return d

    def __str__(self):
        return " ".join(f"{k}={v}" for k, v in self.to_dict().items())


def evaluate(spec: SumSpec) -> Fraction:
    """Exact closed-form value of ``spec``."""
    spec.validate()
    f, N, l, m = spec.family, spec.N, spec.l, spec.m
    if f is Family.CYCLE_R:
        return cycle_resistance(N, l)
    if f is Family.PATH_F:
        return path_sum(N, l)
    if f is Family.SCOTT_COS:
        return scott_sum(N, l)
    if f is Family.SCOTT_DIFF:
        return scott_diff_sum(N, l)
    if f is Family.INV_SIN2:
        return inv_sin2_sum(N)
    if f is Family.ODD_INV_SIN2:
        return odd_inv_sin2_sum(N)
    if f is Family.T4L:
        return t4_sum(N, l)
    if f is Family.TML:
        return t_ml_sum(N, l, m)
    if f is Family.TM:
        return t_m_sum(N, m)
    if f is Family.TML_TWISTED:
        return t_ml_twisted(N, l, m)
    if f is Family.TM_TWISTED:
        return t_m_twisted(N, m)
    if f is Family.SL:
        return s_sum(N, l)
    if f is Family.S1:
        return s1_sum(N, l)
    if f is Family.S2:
        return s2_sum(N, l)
    if f is Family.F1:
        return f1_sum(N, l)
    if f is Family.F2:
        return f2_sum(N, l)
    raise AssertionError(f"unhandled family {f}")


def _oracle_terms(spec: SumSpec) -> Iterator:
    f, N, l, m = spec.family, spec.N, spec.l, spec.m
    pi = mpmath.pi
    sin, cos = mpmath.sin, mpmath.cos

    def angle(k, mult=1):
        return mpmath.mpf(k * mult) * pi / N

    if f in (Family.SCOTT_COS, Family.SCOTT_DIFF, Family.ODD_INV_SIN2):
        for n in range(1, N + 1):
            den = 1 - cos(angle(2 * n - 1))
            if f is Family.SCOTT_COS:
                yield cos(angle(2 * n - 1, l)) / den
            elif f is Family.SCOTT_DIFF:
                yield (1 - cos(angle(2 * n - 1, l))) / den
            else:
                yield 1 / den
        return
    for n in range(1, N):
        alt = -1 if n % 2 else 1       # (-1)^n
        s = sin(angle(n))
        if f is Family.CYCLE_R:
            yield sin(angle(n, l)) ** 2 / s ** 2 / N
        elif f is Family.PATH_F:
            yield (1 - cos(angle(n, l))) / (1 - cos(angle(n))) / N
        elif f is Family.INV_SIN2:
            yield 1 / s ** 2
        elif f is Family.T4L:
            yield sin(angle(n, l)) ** 2 / s ** 4
        elif f is Family.TML:
            yield sin(angle(n, l)) ** 2 / s ** (2 * m)
        elif f is Family.TM:
            yield 1 / s ** (2 * m)
        elif f is Family.TML_TWISTED:
            yield -alt * sin(angle(n, l)) ** 2 / s ** (2 * m)
        elif f is Family.TM_TWISTED:
            yield -alt / s ** (2 * m)
        elif f is Family.SL:
            yield alt * sin(angle(n, l)) ** 2 / s ** 2
        elif f is Family.S1:
            yield sin(angle(n, l)) / s
        elif f is Family.S2:
            yield alt * sin(angle(n, l)) / s
        elif f in (Family.F1, Family.F2):
            term = sin(angle(n, l)) / s * sin(angle(2 * n, l)) / sin(angle(2 * n))
            yield alt * term if f is Family.F2 else term
        else:
            raise AssertionError(f"unhandled family {f}")


def oracle_trig_sum(spec: SumSpec, precision_bits: int = DEFAULT_PRECISION_BITS):
    """Direct summation of the defining series of ``spec`` at ``precision_bits``."""
    check_precision(precision_bits)
    spec.validate()
    with mpmath.workprec(precision_bits):
        return +mpmath.fsum(_oracle_terms(spec))


def default_tolerance(precision_bits: int):
    return mpmath.mpf(2) ** (-(precision_bits // 2))


def fraction_to_mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


@dataclass
class VerificationReport:
    spec: SumSpec
    closed_value: Optional[Fraction]
    oracle_value: Optional["mpmath.mpf"]
    abs_error: Optional["mpmath.mpf"]
    passed: bool
    precision_bits: int
    tolerance: "mpmath.mpf" = field(default=None)
    error: Optional[str] = None

    def to_dict(self) -> dict:
        digits = max(15, int(self.precision_bits * 0.30103) - 4)
        with mpmath.workprec(self.precision_bits):
            return {
                "spec": self.spec.to_dict(),
                "closed": None if self.closed_value is None else str(self.closed_value),
                "oracle": None if self.oracle_value is None else mpmath.nstr(self.oracle_value, digits),
                "abs_error": None if self.abs_error is None else mpmath.nstr(self.abs_error, 6),
                "passed": self.passed,
                "precision_bits": self.precision_bits,
                "error": self.error,
            }


def verify(spec: SumSpec, precision_bits: int = DEFAULT_PRECISION_BITS,
           tolerance=None) -> VerificationReport:
    """Compare the exact closed form with direct summation.

    Passes iff ``|closed - oracle| < tolerance`` (default 2**(-bits/2)).
    Domain errors do not propagate: they produce a failed report whose
    ``error`` names the exception.
    """
    check_precision(precision_bits)
    with mpmath.workprec(precision_bits):
        tol = default_tolerance(precision_bits) if tolerance is None else mpmath.mpf(tolerance)
        try:
            closed = evaluate(spec)
            oracle = oracle_trig_sum(spec, precision_bits)
        except TrigSumError as exc:
            return VerificationReport(spec, None, None, None, False, precision_bits, tol,
                                      f"{type(exc).__name__}: {exc}")
        err = abs(fraction_to_mpf(closed) - oracle)
        return VerificationReport(spec, closed, oracle, err, bool(err < tol), precision_bits, tol)


def admissible_specs(family: Family, N_max: int, m_max: int = 5, N_min: int = 2) -> Iterator[SumSpec]:
    """Every admissible spec of ``family`` with N_min <= N <= N_max and m <= m_max, in a fixed order."""
    family = Family(family)
    for N in range(max(N_min, 2), N_max + 1):
        if family in _EVEN_N and N % 2:
            continue
        if family in _ODD_N and (N % 2 == 0 or N < 3):
            continue
        ls = _l_range(family, N) if family in _NEEDS_L else [None]
        ms = range(1, m_max + 1) if family in _NEEDS_M else [None]
        for l in ls:
            for m in ms:
                yield SumSpec(family, N, l, m)
