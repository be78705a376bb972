"""Dirichlet-series side: truncated Witten and Mordell--Tornheim double sums,
and the pole/residue table of the so(5) Witten zeta function.

    zeta_so5(s) = 6^s sum_{m, n >= 1} (m n (m+n) (m+2n))^(-s),   Re s > 1/2.

Nothing here continues the series analytically; the residues are the known
closed forms evaluated with :mod:`so5count.specfun`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import Algebra, dim, rho
from .errors import DomainError, RangeError
from .specfun import constants, gamma, recip_gamma, zeta

MAX_N = 10 ** 6
_BLOCK = 1 << 22  # summand evaluations per numpy block
LOG6 = math.log(6.0)


@dataclass(frozen=True)
class PartialSumResult:
    s: float
    n_max: int
    value: float
    tail_bound: float


@dataclass(frozen=True)
class PoleSpec:
    location: Fraction
    d_index: int | None
    residue: float


def _check_s(s: float) -> float:
    s = float(s)
    if not (math.isfinite(s) and s > 0.5):
        raise DomainError(f"the double series converges only for s > 1/2, got {s!r}")
    return s


def _check_n(n_max: int) -> int:
    if not 1 <= n_max <= MAX_N:
        raise DomainError(f"truncation must be in [1, {MAX_N}], got {n_max}")
    return int(n_max)


def _row_blocks(n_max: int):
    rows = max(1, _BLOCK // n_max)
    for lo in range(1, n_max + 1, rows):
        yield np.arange(lo, min(lo + rows, n_max + 1), dtype=np.float64)


def _log_summand(m, n):
    return np.log(m) + np.log(n) + np.log(m + n) + np.log(m + 2 * n)


def _shell(s: float, k: int, region=None) -> float:
    """Terms with max(m, n) == k: the row n = k (m <= k) and the column m = k (n < k)."""
    i = np.arange(1, k + 1, dtype=np.float64)
    kk = np.full(k, float(k))
    m = np.concatenate([i, kk[:-1]])
    n = np.concatenate([kk, i[:-1]])
    terms = np.exp(s * (LOG6 - _log_summand(m, n)))
    if region is not None:
        terms = np.where(region(m, n), terms, 0.0)
    return float(np.sum(terms))


def _box_sum(s: float, n_max: int, region=None) -> float:
    """sum over 1 <= m, n <= n_max of 6^s (m n (m+n)(m+2n))^(-s), optionally masked.

    Summed shell by shell (max(m, n) = k) and combined with fsum; each shell is
    the same float whatever n_max is, so the result is non-decreasing in n_max.
    """
    return math.fsum(_shell(s, k, region) for k in range(1, n_max + 1))


def tail_bound(s: float, n_max: int) -> float:
    """Upper bound for the part of the series outside the box [1, N]^2.

    With M = max(m, n) and u = min(m, n) a term is at most 6^s u^(-s) M^(-3s);
    summing u <= M and comparing the M-sum with an integral gives the bounds
    below (the cheapest valid one is used).
    """
    s, big_n = _check_s(s), float(_check_n(n_max))
    log_n = math.log(big_n)
    pref = 2.0 * 6.0 ** s
    cands = []
    a = 4.0 * s - 2.0  # exponent gap in M^(1-4s)
    if s < 1.0:
        cands.append(big_n ** -a / ((1.0 - s) * a))
        cands.append(big_n ** -a / a * (1.0 + log_n + 1.0 / a))
    else:
        b = 3.0 * s - 1.0
        cands.append(big_n ** -b / b * (1.0 + log_n + 1.0 / b))
        if s > 1.0:
            cands.append(s / (s - 1.0) * big_n ** -b / b)
    return pref * min(cands)


def box_dim_cap(n_max: int) -> int:
    """Largest D such that every (j, k) with dim <= D lies in the box [1, N]^2."""
    return dim(Algebra.SO5, n_max + 1, 1) - 1


def zeta_so5_partial(s: float, n_max: int, dim_cap: int | None = None) -> PartialSumResult:
    """Box truncation 6^s sum_{m, n <= N} (m n (m+n)(m+2n))^(-s).

    With ``dim_cap`` only the pairs of dimension <= dim_cap are kept (the box
    must then be large enough to hold them, see :func:`box_dim_cap`).
    """
    s, n_max = _check_s(s), _check_n(n_max)
    region = None
    if dim_cap is not None:
        limit = 6.0 * dim_cap
        if limit >= 2.0 ** 53:
            raise DomainError("dim_cap too large for an exact mask")

        def region(m, n):
            return m * n * (m + n) * (m + 2 * n) <= limit

    value = _box_sum(s, n_max, region)
    return PartialSumResult(s, n_max, value, tail_bound(s, n_max))


def _upper_triangle_sum(s: float, n_max: int, swap: bool) -> float:
    """sum over N >= n > m >= 1 of the summand at (m, n), or at (n, m) if swap."""
    def region(m, n):
        return n > m

    m = np.arange(1, n_max + 1, dtype=np.float64)[None, :]
    parts = []
    for rows in _row_blocks(n_max):
        n = rows[:, None]
        logs = _log_summand(n, m) if swap else _log_summand(m, n)
        terms = np.where(region(m, n), np.exp(s * (LOG6 - logs)), 0.0)
        parts.append(float(np.sum(terms)))
    return math.fsum(parts)


def _diagonal(s: float, n_max: int) -> float:
    n = np.arange(1, n_max + 1, dtype=np.float64)
    return math.fsum(np.exp(-4.0 * s * np.log(n)))


def zeta_so5_split(s: float, n_max: int) -> float:
    """Same box sum regrouped by index set: pairs above the diagonal, pairs
    below it (mirrored), and the diagonal, which is sum n^(-4s).
    """
    s, n_max = _check_s(s), _check_n(n_max)
    above = _upper_triangle_sum(s, n_max, swap=False)
    below = _upper_triangle_sum(s, n_max, swap=True)
    return math.fsum([above, below, _diagonal(s, n_max)])


def zeta_so5_split_doubled(s: float, n_max: int) -> float:
    """2 * 6^s sum_{n > m} (m n (m+n)(m+2n))^(-s) + sum n^(-4s).

    This treats the two off-diagonal halves as equal, which they are not (the
    factor m + 2n is not symmetric); kept to measure that difference.
    """
    s, n_max = _check_s(s), _check_n(n_max)
    return math.fsum([2.0 * _upper_triangle_sum(s, n_max, swap=False), _diagonal(s, n_max)])


def dirichlet_partial(s: float, cap: int) -> float:
    """sum_{n <= cap} rho(n) n^(-s), from exact representation counts."""
    s = float(s)
    terms = []
    for n in range(1, cap + 1):
        r = rho(Algebra.SO5, n)
        if r:
            terms.append(r * float(n) ** -s)
    return math.fsum(terms)


def mt_partial(s1: float, s2: float, s3: float, n_max: int) -> float:
    """sum_{m, n <= N} m^(-s1) n^(-s2) (m+n)^(-s3)."""
    if not (s1 + s3 > 1 and s2 + s3 > 1 and s1 + s2 + s3 > 2):
        raise DomainError(f"({s1}, {s2}, {s3}) is outside the region of convergence")
    n_max = _check_n(n_max)
    m = np.arange(1, n_max + 1, dtype=np.float64)[None, :]
    parts = []
    for rows in _row_blocks(n_max):
        n = rows[:, None]
        parts.append(float(np.sum(np.exp(-(s1 * np.log(m) + s2 * np.log(n) + s3 * np.log(m + n))))))
    return math.fsum(parts)


def residue_at_half() -> float:
    """sqrt(3) Gamma(1/4)^2 / (8 sqrt(pi))."""
    c = constants()
    return float(c["sqrt3"] * c["gamma_quarter"] ** 2 / (8.0 * c["sqrt_pi"]))


def _excluded(d: int) -> bool:
    return d > 1 or d % 3 == 0


def residue_at_third(d: int) -> float:
    """Residue of zeta_so5 at s = d/3 for integer d <= 1, d not in -3N_0.

    Every Gamma in the denominator goes through recip_gamma, so the residue is
    exactly zero when d/2 is a pole of Gamma (even d <= 0).
    """
    if isinstance(d, bool) or int(d) != d:
        raise DomainError(f"d must be an integer, got {d!r}")
    d = int(d)
    if _excluded(d):
        raise DomainError(f"no residue formula for d = {d} (need d <= 1, d not a multiple of 3)")
    if 1 - d > 170:
        raise RangeError(f"(1 - d)! overflows for d = {d}")
    rg_half = recip_gamma(d / 2)
    if rg_half == 0.0:
        return 0.0
    numer = 3.0 ** (d / 3 - 1.5) * math.pi * gamma(d / 6) * zeta(4 * d / 3 - 1)
    inv_denom = 2.0 ** (1 - d / 3) / math.factorial(1 - d) * recip_gamma(d / 3) ** 2 * rg_half
    return float(numer * inv_denom * (d / 3) * (1.0 + 2.0 ** (2 * d / 3 - 1)))


def poles(d_min: int, d_max: int) -> list[PoleSpec]:
    """Pole table for d in [d_min, d_max], sorted by location.

    Locations d/3 with d a multiple of 3 are skipped; even d carry residue 0.
    The pole at 1/2 sits above d = 1 and is listed when d_max == 1.
    """
    if d_max > 1:
        raise DomainError(f"d_max must be <= 1, got {d_max}")
    if d_min > d_max:
        raise DomainError(f"empty range [{d_min}, {d_max}]")
    out = [PoleSpec(Fraction(d, 3), d, residue_at_third(d))
           for d in range(d_min, d_max + 1) if not _excluded(d)]
    if d_max == 1:
        out.append(PoleSpec(Fraction(1, 2), None, residue_at_half()))
    return sorted(out, key=lambda p: p.location)
