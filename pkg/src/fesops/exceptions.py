"""Exception types raised by fesops.

Everything subclasses :class:`FesError` (itself a ``ValueError``), so callers
can catch the whole family with one ``except`` clause while tests can pin the
precise failure mode.
"""


class FesError(ValueError):
    """Base class for domain and input errors raised by this package."""


class NonFiniteEntryError(FesError):
    """An operation element contains NaN or infinite entries."""


class ZeroMatrixError(FesError):
    """The operation is undefined for the all-zero matrix."""


class InvalidElementError(FesError):
    """The element cannot be completed: I - M^dag M is not positive semidefinite."""


class OddQError(FesError):
    """The minus-factor count q must be even for a flip symmetric eigenstate."""


class QOutOfRangeError(FesError):
    """The minus-factor count q lies outside 0..n."""


class NTooLargeError(FesError):
    """The qubit count exceeds the configured cap for dense expansion."""


class NotFesStateError(FesError):
    """The vector is not flip and exchange symmetric within tolerance."""


class AllZeroError(FesError):
    """All family parameters are zero; the state would vanish."""


class DimensionMismatchError(FesError):
    """Operands use different representations or qubit counts."""


class TOutOfRangeError(FesError):
    """The operator parameter t must satisfy |t| < 1 for optimal scaling."""


class DegenerateOutcomeError(FesError):
    """The surviving amplitude underflowed; the outcome has no direction."""


class PoleError(FesError):
    """A parameter hit a pole: t = +-1, or a composition denominator of zero."""


class SweepSpecError(FesError):
    """A sweep specification violates its bounds or is missing inputs."""


class UnknownPanelError(FesError):
    """The requested figure panel does not exist."""
