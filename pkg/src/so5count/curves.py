"""Real boundary curves of the region m n (m+n) (m+2n) <= 6x and their integrals.

For fixed n the boundary in m is the positive root of a depressed cubic, and
likewise for fixed m.  With A = 3x/t^4 both sides reduce to

    f(t) = t * p * [ cbrt(A + sqrt(A^2 - c)) + cbrt(A - sqrt(A^2 - c)) ]

with (c, p) = (1/27, 1) for the column side T1 and (1/432, 2^(-1/3)) for the
row side T2; the boundary itself is T1 = f1 - n and T2 = f2 - m/2.  The second
cube root is evaluated as cbrt(c / (A + sqrt(A^2 - c))) since A^2 >> c over
almost the whole counting range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .quadrature import QuadratureResult, adaptive_gauss_legendre
from .specfun import gen_binom

CBRT2 = 2.0 ** (1 / 3)
G_UPPER = 3.0 ** -0.25


class Side(str, Enum):
    T1 = "t1side"
    T2 = "t2side"


class GIntegral(str, Enum):
    G1 = "G1"
    G2 = "G2"


# side -> (c, prefactor, shift of the boundary relative to f/t)
_SIDES = {
    Side.T1: (1.0 / 27.0, 1.0, 1.0),
    Side.T2: (1.0 / 432.0, 2.0 ** (-1 / 3), 0.5),
}
_G_CONST = {GIntegral.G1: 27.0, GIntegral.G2: 432.0}


@dataclass(frozen=True)
class CurveEval:
    t: float
    x: float
    value: float


def _cbrt(v: float) -> float:
    return math.copysign(abs(v) ** (1 / 3), v)


def _cardano_pair(a: float, c: float) -> tuple[float, float, float]:
    """(cbrt(a + s), cbrt(a - s), s) with s = sqrt(a^2 - c)."""
    rc = math.sqrt(c)
    if a < rc:
        raise DomainError(f"negative discriminant: A = {a!r} < sqrt({c!r})")
    s = math.sqrt(a - rc) * math.sqrt(a + rc)
    big = a + s
    return _cbrt(big), _cbrt(c / big), s


def _check_tx(t: float, x: float) -> None:
    if not (t > 0 and x > 0 and math.isfinite(t) and math.isfinite(x)):
        raise DomainError(f"need t > 0 and x > 0, got t={t!r}, x={x!r}")


def f_side(side: Side, t: float, x: float) -> float:
    """f1(t) (``Side.T1``) or f2(t) (``Side.T2``)."""
    side = Side(side)
    _check_tx(t, x)
    c, pref, _ = _SIDES[side]
    big, small, _ = _cardano_pair(3.0 * x / t ** 4, c)
    return t * pref * (big + small)


def t1(n: float, x: float) -> float:
    """Positive real m with m n (m+n) (m+2n) = 6x.

    >>> t1(1, 10)
    3.0
    """
    return f_side(Side.T1, n, x) - n


def t2(m: float, x: float) -> float:
    """Positive real n with m n (m+n) (m+2n) = 6x."""
    return f_side(Side.T2, m, x) - 0.5 * m


def h_func(z: float) -> float:
    """H(z) = (1 + sqrt z)^(1/3) + (1 - sqrt z)^(1/3) on [0, 1]."""
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"H is defined on [0, 1], got {z!r}")
    sz = math.sqrt(z)
    return _cbrt(1.0 + sz) + _cbrt((1.0 - z) / (1.0 + sz))


def _h_complement(eps):
    """H(1 - eps), vectorised, with no cancellation for small eps."""
    s = np.sqrt(1.0 - eps)
    return np.cbrt(1.0 + s) + np.cbrt(eps / (1.0 + s))


@lru_cache(maxsize=None)
def _h_coeffs(m_max: int) -> tuple[float, ...]:
    third = Fraction(1, 3)
    return tuple(float(2 * gen_binom(third, 2 * m)) for m in range(m_max + 1))


def h_series(z: float, m_max: int) -> float:
    """Binomial series 2 sum_{m <= M} C(1/3, 2m) z^m of H(z)."""
    if m_max < 0:
        raise DomainError("need M >= 0")
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"series is used on [0, 1], got {z!r}")
    acc = 0.0
    for c in reversed(_h_coeffs(m_max)):
        acc = acc * z + c
    return acc


def g_integral(which: GIntegral, y: float, tol: float = 1e-10) -> QuadratureResult:
    """G(y) = integral_y^{3^(-1/4)} t^(-1/3) H(1 - t^8/c) dt, c = 27 or 432.

    Integrated in u with t = u^(3/2), where the integrand (3/2) H(1 - u^12/c)
    is smooth down to u = 0.
    """
    c = _G_CONST[GIntegral(which)]
    if tol < 1e-12:
        raise DomainError(f"tolerance below 1e-12 is not supported, got {tol!r}")
    if not -1e-15 <= y <= G_UPPER + 1e-15:
        raise DomainError(f"y must lie in [0, 3^(-1/4)], got {y!r}")
    y = min(max(y, 0.0), G_UPPER)

    def integrand(u):
        return 1.5 * _h_complement(u ** 12 / c)

    return adaptive_gauss_legendre(integrand, y ** (2 / 3), G_UPPER ** (2 / 3), tol=tol)


def gprime_sum(side: Side, t: float, x: float) -> float:
    """Derivative in t of f(t)/t, from the closed form.

    -(4x/t^5) [cbrt(A + s) - cbrt(A - s)] / s with s = sqrt(A^2 - c), times
    2^(-1/3) on the T2 side.
    """
    side = Side(side)
    _check_tx(t, x)
    c, pref, _ = _SIDES[side]
    big, small, s = _cardano_pair(3.0 * x / t ** 4, c)
    if s == 0.0:
        raise DomainError("discriminant vanishes; derivative is singular")
    return -pref * (4.0 * x / t ** 5) * (big - small) / s


@dataclass(frozen=True)
class LimitConstant:
    name: str
    displayed: float  # constant printed in the derivation
    direct: float  # limit of the closed form as x / t^4 -> infinity
    measured: float  # closed form evaluated far out


def limit_constants(x: float = 1e40, t: float = 1.0) -> list[LimitConstant]:
    """Small-t leading constants of f1, f2 and the fluctuation densities.

    Each is normalised by x^(1/3) and the matching power of t, evaluated at a
    large x/t^4, and put next to the two competing closed-form candidates.
    """
    x13 = x ** (1 / 3)
    return [
        LimitConstant("f1 / (x^(1/3) t^(-1/3))", 2 ** (4 / 3) * 3 ** (1 / 3), 6 ** (1 / 3),
                      f_side(Side.T1, t, x) / (x13 * t ** (-1 / 3))),
        LimitConstant("f2 / (x^(1/3) t^(-1/3))", 2 * 3 ** (1 / 3), 3 ** (1 / 3),
                      f_side(Side.T2, t, x) / (x13 * t ** (-1 / 3))),
        LimitConstant("(g1'+g2') t^(7/3) / x^(1/3)", -(2 ** (10 / 3)) * 3 ** (-2 / 3), -4 / 3 * 6 ** (1 / 3),
                      gprime_sum(Side.T1, t, x) * t ** (7 / 3) / x13),
        LimitConstant("(g3'+g4') t^(7/3) / x^(1/3)", -8 * 3 ** (-2 / 3), -4 / 3 * 3 ** (1 / 3),
                      gprime_sum(Side.T2, t, x) * t ** (7 / 3) / x13),
    ]
