"""Real-argument Gamma, zeta and binomial coefficients in double precision.

Everything here is self-contained (no scipy); the algorithms are

* ``1/Gamma`` from its Taylor series about 3/2, valid on [1, 2], extended by the
  recurrence ``Gamma(x+1) = x Gamma(x)`` and the reflection formula;
* ``zeta`` by Euler--Maclaurin summation with B_2 .. B_24 for s > -1 and the
  functional equation below that.

Results come back as :class:`RealValue`, a ``float`` that also carries a
conservative absolute error bound, so they drop straight into ordinary
arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Real

from .errors import DomainError, PoleError, RangeError

EPS = 2.0 ** -52

PI = math.pi
EULER_GAMMA = 0.57721566490153286061

# Taylor coefficients of 1/Gamma(3/2 + w); |w| <= 1/2 needs ~22 terms for 1e-17.
_RGAMMA_TAYLOR = (
    1.128379167095512573896,
    -4.117452644528310145025e-2,
    -5.266544355255444792632e-1,
    1.751020260439345614951e-1,
    5.09668602477060767747e-2,
    -4.215516936853560099319e-2,
    6.612897826824127276566e-3,
    2.120731442572938336012e-3,
    -1.110730254594890717119e-3,
    1.523576207674768721656e-4,
    2.535520492381416527825e-5,
    -1.389680571791375602197e-5,
    2.156203290514172453456e-6,
    5.794264054052672504226e-8,
    -8.913551118311116054072e-8,
    1.710346941591537374932e-8,
    -9.313686445241901568476e-10,
    -2.680474103349662556504e-10,
    7.458932233316326050693e-11,
    -8.012807061414718370918e-12,
    -8.38234303345185493049e-14,
    1.694634090432052226774e-13,
    -2.787575670712575208298e-14,
    1.867039469506530541912e-15,
    1.304949900858798658818e-16,
)

# B_2, B_4, ..., B_26.  The last one only sizes the truncation error.
BERNOULLI_EVEN = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
)
# B_2k / (2k)!
_EM_COEFFS = tuple(float(b / math.factorial(2 * k + 2)) for k, b in enumerate(BERNOULLI_EVEN))

GAMMA_MAX_ARG = 171.62


class RealValue(float):
    """A float together with a conservative absolute error bound."""

    abs_error_bound: float

    def __new__(cls, value: float, abs_error_bound: float = 0.0) -> RealValue:
        if not math.isfinite(value):
            raise RangeError(f"non-finite result {value!r}")
        if not (math.isfinite(abs_error_bound) and abs_error_bound >= 0.0):
            raise ValueError(f"bad error bound {abs_error_bound!r}")
        self = super().__new__(cls, value)
        self.abs_error_bound = float(abs_error_bound)
        return self

    @property
    def value(self) -> float:
        return float(self)

    def __repr__(self) -> str:
        return f"RealValue({float(self)!r}, abs_error_bound={self.abs_error_bound:.3g})"


def _check_finite(name: str, x: float) -> float:
    if not isinstance(x, Real):
        raise TypeError(f"{name} expects a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name}: argument must be finite, got {x!r}")
    return x


def sinpi(x: float) -> float:
    """sin(pi x) with exact argument reduction, so zeros at integers are exact."""
    r = math.fmod(x, 2.0)  # exact
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(PI * r)


def _rgamma_unit(y: float) -> float:
    """1/Gamma(y) for y in [1, 2] from the Taylor series about 3/2."""
    w = y - 1.5
    acc = 0.0
    for c in reversed(_RGAMMA_TAYLOR):
        acc = acc * w + c
    return acc


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> RealValue:
    """Gamma(x) for real x, |x| <= 171.

    >>> round(gamma(0.5) ** 2, 12) == round(math.pi, 12)
    True
    """
    x = _check_finite("gamma", x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at {x!r}")
    if x > GAMMA_MAX_ARG or x < -GAMMA_MAX_ARG:
        raise RangeError(f"gamma({x!r}) is outside the double range")

    if x >= 1.0:
        if x == math.floor(x):
            return RealValue(float(math.factorial(int(x) - 1)), 0.0)
        n = int(math.floor(x)) - 1
        y = x - n  # exact, y in [1, 2)
        value = 1.0 / _rgamma_unit(y)
        for i in range(n):
            value *= y + i
        if not math.isfinite(value):
            raise RangeError(f"gamma({x!r}) overflows")
        return RealValue(value, abs(value) * 4.0 * EPS * (4 + n))

    if x > 0.0:
        # recur down from [1, 2): better than reflection near 0
        g = gamma(x + 1.0)
        value = g / x
        return RealValue(value, abs(value) * (g.abs_error_bound / abs(g) + 4.0 * EPS))

    g = gamma(1.0 - x)
    s = sinpi(x)
    value = PI / (s * g)
    rel = g.abs_error_bound / abs(g) + 8.0 * EPS
    return RealValue(value, abs(value) * rel)


def recip_gamma(x: float) -> RealValue:
    """1/Gamma(x); exactly zero at the poles of Gamma."""
    x = _check_finite("recip_gamma", x)
    if _is_nonpositive_integer(x):
        return RealValue(0.0, 0.0)
    if x > GAMMA_MAX_ARG:
        # true value is below the smallest normal double
        return RealValue(0.0, 1e-300)
    if 1.0 <= x <= 2.0:
        value = _rgamma_unit(x)
        return RealValue(value, abs(value) * 4.0 * EPS)
    g = gamma(x)
    value = 1.0 / g
    return RealValue(value, abs(value) * (g.abs_error_bound / abs(g) + 2.0 * EPS))


def _em_tail_term(s: float, n: int, k: int) -> float:
    """The k-th Euler--Maclaurin correction B_2k/(2k)! (s)_(2k-1) N^(-s-2k+1)."""
    poch = 1.0
    for i in range(2 * k - 1):
        poch *= s + i
    return _EM_COEFFS[k - 1] * poch * float(n) ** (-s - 2 * k + 1)


def zeta_euler_maclaurin(s: float, n_terms: int | None = None) -> RealValue:
    """zeta(s) by Euler--Maclaurin summation; reliable for s > -1.

    ``n_terms`` is the split point N; by default the smallest N >= 8 whose first
    omitted correction is below 1e-15.
    """
    s = _check_finite("zeta", s)
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    n_corr = len(_EM_COEFFS) - 1
    if n_terms is None:
        n = 8
        while abs(_em_tail_term(s, n, n_corr + 1)) >= 1e-15:
            n += 4
    else:
        n = int(n_terms)
        if n < 1:
            raise DomainError("n_terms must be >= 1")

    terms = [float(i) ** -s for i in range(1, n)]
    terms.append(float(n) ** (1.0 - s) / (s - 1.0))
    terms.append(0.5 * float(n) ** -s)
    terms.extend(_em_tail_term(s, n, k) for k in range(1, n_corr + 1))
    value = math.fsum(terms)
    err = abs(_em_tail_term(s, n, n_corr + 1)) + 4.0 * EPS * math.fsum(abs(t) for t in terms)
    return RealValue(value, err)


def zeta_reflected(s: float) -> RealValue:
    """zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), for s < 1."""
    s = _check_finite("zeta", s)
    if s >= 1.0:
        raise DomainError("the reflected form is used only for s < 1")
    if s < 0 and s == math.floor(s) and int(s) % 2 == 0:
        return RealValue(0.0, 0.0)
    z = zeta_euler_maclaurin(1.0 - s)
    g = gamma(1.0 - s)
    factor = 2.0 ** s * PI ** (s - 1.0) * sinpi(0.5 * s)
    value = factor * g * z
    if not math.isfinite(value):
        raise RangeError(f"zeta({s!r}) overflows")
    rel = z.abs_error_bound / abs(z) + g.abs_error_bound / abs(g) + 16.0 * EPS
    return RealValue(value, abs(value) * rel)


def zeta(s: float) -> RealValue:
    """Riemann zeta at real s != 1.

    >>> abs(zeta(2) - math.pi ** 2 / 6) < 1e-15
    True
    """
    s = _check_finite("zeta", s)
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if s > -1.0:
        return zeta_euler_maclaurin(s)
    return zeta_reflected(s)


def gen_binom(alpha, m: int):
    """alpha (alpha-1) ... (alpha-m+1) / m!.

    Works with floats or Fractions; Fractions give the exact rational.

    >>> gen_binom(Fraction(1, 3), 3)
    Fraction(5, 81)
    """
    if m < 0:
        raise DomainError(f"gen_binom needs m >= 0, got {m}")
    result = alpha * 0 + 1
    for i in range(m):
        result = result * (alpha - i) / (i + 1)
    return result


@lru_cache(maxsize=None)
def constants() -> dict[str, RealValue]:
    """Named constants used throughout the package, evaluated once."""
    table = {
        "pi": RealValue(PI, EPS * PI),
        "euler_gamma": RealValue(EULER_GAMMA, EPS),
        "sqrt_pi": RealValue(math.sqrt(PI), 2 * EPS),
        "sqrt3": RealValue(math.sqrt(3.0), 2 * EPS),
        "cbrt2": RealValue(2.0 ** (1 / 3), 4 * EPS),
        "cbrt3": RealValue(3.0 ** (1 / 3), 4 * EPS),
        "cbrt6": RealValue(6.0 ** (1 / 3), 4 * EPS),
        "gamma_quarter": gamma(0.25),
        "gamma_third": gamma(1 / 3),
        "gamma_sixth": gamma(1 / 6),
        "zeta_half": zeta(0.5),
        "zeta_third": zeta(1 / 3),
    }
    return table
