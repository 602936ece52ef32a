"""Truncated formal Laurent series over the rationals and the residue operator.

A :class:`LaurentSeries` lives in one formal variable.  Coefficients at
exponents ``>= truncation_order`` are *unknown*, not zero; asking for one
raises :class:`~trigsums.errors.WindowExceeded`.  A series built with
``truncation_order=None`` is an exact Laurent polynomial.

Whenever half-integer powers of ``w`` show up (arguments such as
``(1 + w)/sqrt(w)``) the computation is done in ``v`` with ``w = v**2``;
:meth:`LaurentSeries.in_w` converts back once only even ``v``-powers remain.
"""

from __future__ import annotations

import enum
import functools
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import WindowExceeded, ZeroLeadingCoefficient
from .exact import as_rational


def default_window(*params: int) -> int:
    """Library default truncation order, ``4 * max(params) + 8``."""
    return 4 * max((abs(p) for p in params), default=0) + 8


def _min_order(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    """``sum(c[i] * v**(min_exponent + i)) + O(v**truncation_order)``.

    Instances are immutable and always normalized: the lowest stored
    coefficient is nonzero and trailing zeros are dropped.  The zero series
    with a finite window stores ``min_exponent == truncation_order``.
    """

    __slots__ = ("_min", "_coeffs", "_order")

    def __init__(self, coefficients: Iterable = (), min_exponent: int = 0,
                 truncation_order: Optional[int] = None):
        coeffs = [as_rational(c) for c in coefficients]
        if truncation_order is not None:
            keep = max(0, truncation_order - min_exponent)
            coeffs = coeffs[:keep]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        coeffs = coeffs[start:end]
        if coeffs:
            min_exponent += start
        elif truncation_order is not None:
            min_exponent = truncation_order
        else:
            min_exponent = 0
        self._min = min_exponent
        self._coeffs = tuple(coeffs)
        self._order = truncation_order

    # -- constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coefficient=1, truncation_order: Optional[int] = None):
        return cls([coefficient], exponent, truncation_order)

    @classmethod
    def polynomial(cls, coefficients: Sequence, min_exponent: int = 0):
        return cls(coefficients, min_exponent, None)

    @classmethod
    def from_terms(cls, terms: dict, truncation_order: Optional[int] = None):
        """Build from an ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls((), 0, truncation_order)
        lo, hi = min(terms), max(terms)
        coeffs = [terms.get(e, 0) for e in range(lo, hi + 1)]
        return cls(coeffs, lo, truncation_order)

    # -- accessors ----------------------------------------------------------

    @property
    def min_exponent(self) -> int:
        return self._min

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def truncation_order(self) -> Optional[int]:
        return self._order

    @property
    def is_exact(self) -> bool:
        return self._order is None

    def is_zero(self) -> bool:
        return not self._coeffs

    def max_exponent(self) -> Optional[int]:
        """Highest exponent carrying a stored nonzero coefficient."""
        if not self._coeffs:
            return None
        return self._min + len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if self._order is not None and k >= self._order:
            raise WindowExceeded(
                f"coefficient of v^{k} requested but the series is only known below v^{self._order}")
        i = k - self._min
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def terms(self) -> dict:
        return {self._min + i: c for i, c in enumerate(self._coeffs) if c}

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Optional["LaurentSeries"]:
        if isinstance(other, LaurentSeries):
            return other
        try:
            return LaurentSeries([as_rational(other)])
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = _min_order(self._order, o._order)
        terms: dict = {}
        for src in (self, o):
            for e, c in src.terms().items():
                if order is None or e < order:
                    terms[e] = terms.get(e, 0) + c
        return LaurentSeries.from_terms(terms, order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self._coeffs], self._min, self._order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "LaurentSeries":
        c = as_rational(c)
        if c == 0:
            return LaurentSeries((), 0, self._order)
        return LaurentSeries([c * x for x in self._coeffs], self._min, self._order)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self, other
        if (a.is_exact and a.is_zero()) or (b.is_exact and b.is_zero()):
            return LaurentSeries()
        # a truncated operand pollutes the product from its window shifted by
        # the other operand's lowest exponent
        order = None
        if a._order is not None:
            order = a._order + b._min
        if b._order is not None:
            order = _min_order(order, b._order + a._min)
        lo = a._min + b._min
        n = len(a._coeffs) + len(b._coeffs) - 1
        if order is not None:
            n = min(n, order - lo)
        out = [Fraction(0)] * max(n, 0)
        for i, x in enumerate(a._coeffs):
            if i >= n:
                break
            for j, y in enumerate(b._coeffs[: n - i]):
                out[i + j] += x * y
        return LaurentSeries(out, lo, order)

    def __rmul__(self, other):
        return self.__mul__(other)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by ``v**k``."""
        order = None if self._order is None else self._order + k
        if not self._coeffs:
            return LaurentSeries((), 0, order)
        return LaurentSeries(self._coeffs, self._min + k, order)

    def truncate(self, order: int) -> "LaurentSeries":
        return LaurentSeries(self._coeffs, self._min, _min_order(self._order, order))

    def inverse(self, order: Optional[int] = None) -> "LaurentSeries":
        """Multiplicative inverse.

        For a truncated series the result window follows from the input
        window.  An exact series has an infinite inverse, so ``order`` (the
        truncation order of the result) must be supplied.
        """
        if not self._coeffs:
            raise ZeroLeadingCoefficient("cannot invert a series with no known nonzero coefficient")
        a = self._min
        if self._order is not None:
            result_order = self._order - 2 * a
            if order is not None:
                result_order = min(result_order, order)
        elif order is None:
            raise ValueError("inverting an exact Laurent polynomial needs an explicit order")
        else:
            result_order = order
        length = result_order + a
        if length <= 0:
            return LaurentSeries((), 0, result_order)
        s = self._coeffs
        inv0 = 1 / s[0]
        t = [inv0]
        for i in range(1, length):
            acc = Fraction(0)
            for j in range(1, min(i, len(s) - 1) + 1):
                acc += s[j] * t[i - j]
            t.append(-acc * inv0)
        return LaurentSeries(t, -a, result_order)

    def __pow__(self, n: int, order: Optional[int] = None):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse(order)
            n = -n
        result = LaurentSeries([1])
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def power(self, n: int, order: Optional[int] = None) -> "LaurentSeries":
        """``self**n``; ``order`` is needed for negative n of an exact series."""
        return self.__pow__(n, order)

    def substitute_power(self, k: int) -> "LaurentSeries":
        """Substitute ``v -> v**k`` (k >= 1)."""
        if k < 1:
            raise ValueError("substitution power must be positive")
        order = None if self._order is None else self._order * k
        return LaurentSeries.from_terms({e * k: c for e, c in self.terms().items()}, order)

    def in_w(self) -> "LaurentSeries":
        """Reinterpret a ``v``-series with only even powers as a series in ``w = v**2``."""
        terms = self.terms()
        odd = [e for e in terms if e % 2]
        if odd:
            raise ValueError(f"series has half-integer powers of w (v-exponents {sorted(odd)[:4]})")
        order = None if self._order is None else -((-self._order) // 2)
        return LaurentSeries.from_terms({e // 2: c for e, c in terms.items()}, order)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            other = o
        return (self._min, self._coeffs, self._order) == (other._min, other._coeffs, other._order)

    def __hash__(self):
        return hash((self._min, self._coeffs, self._order))

    def __repr__(self):
        parts = []
        for e, c in self.terms().items():
            parts.append(f"{c}*v^{e}" if e else f"{c}")
        body = " + ".join(parts) if parts else "0"
        if self._order is not None:
            body += f" + O(v^{self._order})"
        return f"LaurentSeries({body})"


def series_residue(s: LaurentSeries, k: int) -> Fraction:
    """Coefficient of ``v**k`` in ``s``: ``res_v s(v) v**(-k-1)``."""
    return s.coeff(k)


def res(s: LaurentSeries) -> Fraction:
    """Formal residue at 0, the coefficient of ``v**-1``."""
    return s.coeff(-1)


def series_inverse(s: LaurentSeries, order: Optional[int] = None) -> LaurentSeries:
    return s.inverse(order)


ONE_PLUS_V = LaurentSeries.polynomial([1, 1])
ONE_MINUS_V = LaurentSeries.polynomial([1, -1])


@functools.lru_cache(maxsize=512)
def one_plus_power(n: int, order: Optional[int] = None) -> LaurentSeries:
    """``(1 + v)**n``; negative n requires ``order``.  Cached (series are immutable)."""
    return ONE_PLUS_V.power(n, order)


def geometric_series(step: int, order: int) -> LaurentSeries:
    """``1 / (1 - v**step)`` known below ``v**order``."""
    if step < 1:
        raise ValueError("step must be positive")
    return LaurentSeries.from_terms({e: 1 for e in range(0, max(order, 1), step)}, order)


def central_binomial_series(order: int) -> LaurentSeries:
    """``(1 - 4v)**(-1/2)`` from c0 = 1, c(k+1) = c(k) (4k + 2)/(k + 1)."""
    coeffs = []
    c = Fraction(1)
    for k in range(max(order, 0)):
        coeffs.append(c)
        c = c * (4 * k + 2) / (k + 1)
    return LaurentSeries(coeffs, 0, order)


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) by the multiplicative formula; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("binomial expects n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    k = min(k, n - k)
    num = den = 1
    for i in range(1, k + 1):
        num *= n - k + i
        den *= i
    return Fraction(num // den)


def binomial_by_residue(n: int, k: int) -> Fraction:
    """C(n, k) as ``res_w (1 + w)**n w**(-k-1)``, expanding the power by series products."""
    if n < 0:
        raise ValueError("binomial expects n >= 0")
    return series_residue(one_plus_power(n), k)


def central_binomial_by_residue(n: int) -> Fraction:
    """C(2n, n) as ``res_w (1 - 4w)**(-1/2) w**(-n-1)``."""
    return series_residue(central_binomial_series(n + 1), n)


class ChebyshevKind(enum.Enum):
    FIRST_NORMALIZED = "first-normalized"   # C_n(x) = 2 T_n(x/2)
    SECOND = "second"                       # U_n(x/2)


def chebyshev_coefficients(kind: ChebyshevKind, n: int) -> dict:
    """Coefficients ``{power: c}`` of C_n(x) or U_n(x/2) as polynomials in x."""
    if n < 0:
        raise ValueError("Chebyshev degree must be non-negative")
    out = {}
    if kind is ChebyshevKind.FIRST_NORMALIZED:
        if n == 0:
            return {0: Fraction(2)}
        for k in range(n // 2 + 1):
            out[n - 2 * k] = Fraction((-1) ** k * n * comb(n - k, k), n - k)
    else:
        for k in range(n // 2 + 1):
            out[n - 2 * k] = Fraction((-1) ** k * comb(n - k, k))
    return out


def chebyshev_eval_at_node(kind: ChebyshevKind, n: int, window: Optional[int] = None,
                           node_power: int = 1) -> LaurentSeries:
    """Expand C_n or U_n(./2) at ``x = v**-p + v**p`` from the defining sum.

    With ``w = v**2``, ``node_power=1`` is the argument ``(1 + w)/sqrt(w)``
    and ``node_power=2`` is ``(1 + w**2)/w``.  ``window`` is a truncation
    order in ``v``; ``None`` keeps the exact Laurent polynomial.
    """
    node = LaurentSeries.from_terms({-node_power: 1, node_power: 1})
    total = LaurentSeries()
    for power, c in chebyshev_coefficients(kind, n).items():
        total = total + node.power(power) * c
    if window is not None:
        if window <= total.min_exponent and not total.is_zero():
            raise WindowExceeded(f"window v^{window} is below the lowest term v^{total.min_exponent}")
        total = total.truncate(window)
    return total
