"""Dimensions of SU(2) and twisted SO(3) conformal-block spaces.

dim V_{g,k} = ((k+2)/2)^(g-1) * T_{2(g-1)} at N = k + 2, and the twisted
dimension uses the alternating sum.  Both go through the exact
T-recursions, so integrality is asserted, never rounded into place.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .closed_forms import t_m_sum, t_m_twisted
from .errors import (ArgumentOutOfRange, DivergentSamplePoint, NonIntegerResult, ParityViolation,
                     SingularSamplePoint, UnsupportedGenus)
from .power_sums import DEFAULT_PRECISION_BITS, check_precision


def _integral(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} = {value} is not an integer")
    return value


def dim_untwisted(g: int, k: int) -> Fraction:
    """dim V_{g,k} for g >= 1 and level k >= 0.

    Genus 1 gives k + 1 and level 0 gives 1; both are needed by the
    generating function and by the twisted relation.
    """
    if not isinstance(g, int) or g < 1:
        raise ArgumentOutOfRange(f"genus must be >= 1, got {g!r}")
    if not isinstance(k, int) or k < 0:
        raise ArgumentOutOfRange(f"level must be >= 0, got {k!r}")
    N = k + 2
    if g == 1:
        return Fraction(N - 1)
    value = Fraction(N, 2) ** (g - 1) * t_m_sum(N, g - 1)
    return _integral(value, f"dim V(g={g}, k={k})")


def dim_untwisted_closed(g: int, k: int) -> Fraction:
    """The closed polynomials in k for genus 2, 3 and 4."""
    d = Fraction((k + 1) * (k + 2) * (k + 3), 6)
    if g == 2:
        return d
    if g == 3:
        return d * (d + 2 * (k + 2)) / 5
    if g == 4:
        inner = d * Fraction(2 * (k + 1) * (k + 2) * (k + 3) + 27 * (k + 2), 6) + 6 * (k + 2) ** 2
        return d * inner / 35
    raise UnsupportedGenus(f"closed polynomials exist for g in {{2, 3, 4}}, got g={g}")


def dim_twisted(g: int, k: int) -> Fraction:
    """dim V^t_{g,k} = ((k+2)/2)^(g-1) T^t_{2(g-1)} at N = k + 2; k must be even."""
    if not isinstance(g, int) or g < 2:
        raise ArgumentOutOfRange(f"genus must be >= 2, got {g!r}")
    if not isinstance(k, int) or k < 2:
        raise ArgumentOutOfRange(f"level must be >= 2, got {k!r}")
    if k % 2:
        raise ParityViolation(f"the twisted dimension needs an even level, got k={k}")
    N = k + 2
    value = Fraction(N, 2) ** (g - 1) * t_m_twisted(N, g - 1)
    return _integral(value, f"dim V^t(g={g}, k={k})")


class RelationConvention(enum.Enum):
    UNSHIFTED = "unshifted"      # dim V^t_{g,k} = dim V_{g,k} - 2^g dim V_{g,k/2-1}
    AS_PRINTED = "as-printed"    # dim V^t_{g,k-2} = dim V_{g,k-2} - 2^g dim V_{g,k/2-1}


def twisted_relation_holds(g: int, k: int, convention: RelationConvention) -> bool:
    """Test the twisted/untwisted identity at (g, k) under one index convention.

    Splitting the alternating sum into all terms minus twice the even
    terms gives the unshifted form; the even terms are the untwisted sum at
    level k/2 - 1.
    """
    if convention is RelationConvention.UNSHIFTED:
        return dim_twisted(g, k) == dim_untwisted(g, k) - 2 ** g * dim_untwisted(g, k // 2 - 1)
    return dim_twisted(g, k - 2) == dim_untwisted(g, k - 2) - 2 ** g * dim_untwisted(g, k // 2 - 1)


@dataclass(frozen=True)
class BlockDimensionQuery:
    genus: int
    level: int
    twisted: bool = False

    def __post_init__(self):
        if self.twisted and self.level % 2:
            raise ParityViolation("twisted conformal blocks need an even level")

    def evaluate(self) -> Fraction:
        if self.twisted:
            return dim_twisted(self.genus, self.level)
        return dim_untwisted(self.genus, self.level)


# -- generating function ---------------------------------------------------------

@dataclass
class GenfunSample:
    angle: "mpmath.mpf"
    partial_sum: "mpmath.mpf"
    closed_value: "mpmath.mpf"
    residual: "mpmath.mpf"
    tail_bound: "mpmath.mpf"
    passed: bool


@dataclass
class GenfunReport:
    k: int
    g_max: int
    precision_bits: int
    samples: list

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.samples)


def genfun_check(k: int, g_max: int, sample_points: Sequence,
                 precision_bits: int = DEFAULT_PRECISION_BITS) -> GenfunReport:
    """Check sum_g dim V_{g,k-2} (2/k sin^2 x)^(g-1) = k sin((k-1)x)/(sin(kx) cos x).

    The g-th term equals sum_{n=1}^{k-1} r_n^(g-1) with
    r_n = sin^2 x / sin^2(n pi/k), so the tail after g_max is at most
    (k-1) rho^g_max/(1 - rho) with rho = sin^2 x / sin^2(pi/k).  A sample
    passes when the residual stays below that bound.
    """
    if not isinstance(k, int) or k < 3:
        raise ArgumentOutOfRange(f"k must be >= 3, got {k!r}")
    if not isinstance(g_max, int) or g_max < 1:
        raise ArgumentOutOfRange(f"g_max must be >= 1, got {g_max!r}")
    check_precision(precision_bits)
    dims = [dim_untwisted(g, k - 2) for g in range(1, g_max + 1)]
    samples = []
    with mpmath.workprec(precision_bits):
        eps = mpmath.mpf(2) ** (-(precision_bits // 2))
        for raw in sample_points:
            x = mpmath.mpf(raw)
            denom = mpmath.sin(k * x) * mpmath.cos(x)
            if abs(denom) < eps:
                raise SingularSamplePoint(f"sin(kx) cos(x) vanishes at x={raw}")
            rho = mpmath.sin(x) ** 2 / mpmath.sin(mpmath.pi / k) ** 2
            if rho >= 1:
                raise DivergentSamplePoint(f"x={raw} lies outside the disc of convergence for k={k}")
            z = 2 * mpmath.sin(x) ** 2 / k
            partial = mpmath.fsum(mpmath.mpf(d.numerator) * z ** g for g, d in enumerate(dims))
            closed = k * mpmath.sin((k - 1) * x) / denom
            residual = abs(partial - closed)
            bound = (k - 1) * rho ** g_max / (1 - rho)
            samples.append(GenfunSample(x, partial, closed, residual, bound, bool(residual <= bound + eps)))
    return GenfunReport(k, g_max, precision_bits, samples)
