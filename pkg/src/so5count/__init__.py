"""Exact representation counting for so(5), its Witten zeta function, and the
asymptotic model of the summatory function."""

from .asymptotics import AsymptoticCoefficients, Model, SummatoryRow, coefficients, predict, residual_scan
from .counting import Algebra, Axis, CountQuery, Method, RepPoint, boundary_count, count, dim, rho, summatory
from .errors import (
    CountOverflowError,
    DomainError,
    MethodError,
    PoleError,
    RangeError,
    So5CountError,
    ToleranceError,
)
from .specfun import RealValue, gamma, recip_gamma, zeta
from .wittenzeta import PoleSpec, poles, zeta_so5_partial

__version__ = "0.1.0"

__all__ = [
    "Algebra", "AsymptoticCoefficients", "Axis", "CountOverflowError", "CountQuery", "DomainError",
    "Method", "MethodError", "Model", "PoleError", "PoleSpec", "RangeError", "RealValue", "RepPoint",
    "So5CountError", "SummatoryRow", "ToleranceError", "boundary_count", "coefficients", "count", "dim",
    "gamma", "poles", "predict", "recip_gamma", "residual_scan", "rho", "summatory", "zeta", "zeta_so5_partial",
]
