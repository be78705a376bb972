"""Exception types shared by the library and the CLI."""


class So5CountError(Exception):
    """Base class for every computational error raised by this package."""


class DomainError(So5CountError, ValueError):
    pass


class PoleError(DomainError):
    """Argument sits on a pole (Gamma at a non-positive integer, zeta at 1)."""


class RangeError(So5CountError, OverflowError):
    """Result does not fit in the double range."""


class CountOverflowError(So5CountError, OverflowError):
    """An exact integer intermediate would leave the supported 128-bit range."""


class MethodError(So5CountError, ValueError):
    pass


class ToleranceError(So5CountError, ArithmeticError):
    """Requested quadrature tolerance is not reachable within the node cap."""
