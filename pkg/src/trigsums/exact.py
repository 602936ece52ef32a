"""Exact arithmetic: rationals and the quadratic field Q(sqrt 3).

Rationals are :class:`fractions.Fraction` instances, which are always stored
reduced with a positive denominator, so structural equality is value
equality.  :class:`QuadraticValue` adds the single irrationality needed by
the 2xN resistor formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Union

from .errors import NonRationalValue

ExactRational = Fraction

RationalLike = Union[int, Fraction]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def reciprocal_factorial(n: int) -> Fraction:
    """1/n!, with the reciprocal-gamma convention 1/n! = 0 for negative n."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def sign_power(n: int) -> int:
    """(-1)**n for any integer n, including negative n."""
    return -1 if n % 2 else 1


@dataclass(frozen=True)
class QuadraticValue:
    """The number ``rational_part + root3_part * sqrt(3)``."""

    rational_part: Fraction = Fraction(0)
    root3_part: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rational_part", as_rational(self.rational_part))
        object.__setattr__(self, "root3_part", as_rational(self.root3_part))

    @classmethod
    def coerce(cls, x: "QuadraticValue | RationalLike") -> "QuadraticValue":
        if isinstance(x, QuadraticValue):
            return x
        return cls(as_rational(x))

    @property
    def is_rational(self) -> bool:
        return self.root3_part == 0

    def conjugate(self) -> "QuadraticValue":
        return QuadraticValue(self.rational_part, -self.root3_part)

    def norm(self) -> Fraction:
        """Field norm a^2 - 3 b^2 = x * conjugate(x)."""
        return self.rational_part ** 2 - 3 * self.root3_part ** 2

    def __add__(self, other):
        try:
            o = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticValue(self.rational_part + o.rational_part, self.root3_part + o.root3_part)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue(-self.rational_part, -self.root3_part)

    def __sub__(self, other):
        try:
            o = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return QuadraticValue.coerce(other) - self

    def __mul__(self, other):
        try:
            o = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.rational_part, self.root3_part
        c, d = o.rational_part, o.root3_part
        return QuadraticValue(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticValue":
        n = self.norm()
        if n == 0:
            # the norm vanishes only at zero since sqrt(3) is irrational
            raise ZeroDivisionError("QuadraticValue division by zero")
        conj = self.conjugate()
        return QuadraticValue(conj.rational_part / n, conj.root3_part / n)

    def __truediv__(self, other):
        try:
            o = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadraticValue.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return quad_pow(self.inverse(), -n)
        return quad_pow(self, n)

    def __eq__(self, other):
        try:
            o = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self.rational_part == o.rational_part and self.root3_part == o.root3_part

    def __hash__(self):
        if self.root3_part == 0:
            return hash(self.rational_part)
        return hash((self.rational_part, self.root3_part))

    def to_mpf(self):
        import mpmath

        return (mpmath.mpf(self.rational_part.numerator) / self.rational_part.denominator
                + mpmath.mpf(self.root3_part.numerator) / self.root3_part.denominator
                * mpmath.sqrt(3))

    def __float__(self):
        return float(self.rational_part) + float(self.root3_part) * 3 ** 0.5

    def __str__(self):
        if self.root3_part == 0:
            return str(self.rational_part)
        sign = "-" if self.root3_part < 0 else "+"
        return f"{self.rational_part} {sign} {abs(self.root3_part)}*sqrt(3)"


SQRT3 = QuadraticValue(0, 1)
ONE = QuadraticValue(1)
# 2 - sqrt(3): the decay rate of every 2xN closed form
TWO_MINUS_ROOT3 = QuadraticValue(2, -1)


def quad_pow(base: QuadraticValue, n: int) -> QuadraticValue:
    """``base**n`` for n >= 0 by binary exponentiation."""
    if n < 0:
        raise ValueError("quad_pow needs a non-negative exponent")
    result = ONE
    square = QuadraticValue.coerce(base)
    while n:
        if n & 1:
            result = result * square
        square = square * square
        n >>= 1
    return result


def quad_to_rational(x: QuadraticValue) -> Fraction:
    if x.root3_part != 0:
        raise NonRationalValue(f"{x} has a nonzero sqrt(3) component")
    return x.rational_part
