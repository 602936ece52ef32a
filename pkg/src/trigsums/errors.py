"""Exception hierarchy shared by every module of the package."""


class TrigSumError(ValueError):
    """Base class for all domain errors raised by :mod:`trigsums`."""


class NonRationalValue(TrigSumError):
    """A value in Q(sqrt 3) that was expected to be rational was not."""


class WindowExceeded(TrigSumError):
    """A coefficient beyond the known window of a truncated series was requested."""


class ZeroLeadingCoefficient(TrigSumError):
    """Series inversion needs a nonzero lowest-order coefficient."""


class OutOfValidityRange(TrigSumError):
    """Parameters fall outside the range where a printed closed form holds."""


class ArgumentOutOfRange(TrigSumError):
    pass


class ParityViolation(TrigSumError):
    """The sum is only defined (or only non-trivial) for the other parity."""


class NonIntegerResult(TrigSumError):
    """A dimension came out non-integral; this always indicates a bug."""


class UnsupportedGenus(TrigSumError):
    pass


class SingularSamplePoint(TrigSumError):
    pass


class DivergentSamplePoint(TrigSumError):
    """Sample angle lies outside the disc of convergence of a generating function."""


class CoordinateOutOfRange(TrigSumError):
    pass


class DisconnectedGraph(TrigSumError):
    pass


class SameNode(TrigSumError):
    pass
