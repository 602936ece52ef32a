"""Exact closed forms for finite trigonometric sums, with high-precision oracles."""

from .closed_forms import Family, SumSpec, VerificationReport, evaluate, oracle_trig_sum, verify
from .errors import TrigSumError
from .exact import ExactRational, QuadraticValue
from .series import LaurentSeries, res

__all__ = [
    "ExactRational", "Family", "LaurentSeries", "QuadraticValue", "SumSpec", "TrigSumError",
    "VerificationReport", "evaluate", "oracle_trig_sum", "res", "verify",
]

__version__ = "0.1.0"
