"""Exception types shared across the package."""


class SpinclockError(Exception):
    """Base class for all package-specific errors."""


class ChartSingularityError(SpinclockError):
    """Raised when a stereographic-chart coordinate is requested at its pole
    (beta = 0, or a sweep angle at pi/2).  The antipodal chart covers the
    missing point."""


class ClockRangeError(SpinclockError):
    """Raised when a clock reading lies outside the oscillator amplitude."""


class NullPhysicalSubspaceError(SpinclockError):
    """Raised when the energy does not select an integer number sector.

    Carries the distance of E' to the nearest integer in ``residual``.
    """

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(
            f"no physical subspace: E' is {residual:.3e} away from the nearest integer"
        )
