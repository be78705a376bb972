"""Exact lattice-point counting for representation dimensions.

The so(5) irreducible representations are indexed by pairs (j, k) of positive
integers with dimension j k (j+k) (j+2k) / 6; for su(3) the dimension is
j k (j+k) / 2.  ``summatory`` counts the pairs with dimension <= x, either by
walking the boundary of the region column by column (``Method.BRUTE``) or by
the hyperbola split, which only needs the first floor(x^(1/4)) columns and
rows (``Method.HYPERBOLA``).  All arithmetic is on Python integers; no floating
point enters a count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .errors import CountOverflowError, DomainError, MethodError

MAX_X = 10 ** 14
# Quartic products must stay below this; mirrors a signed 128-bit accumulator.
PRODUCT_LIMIT = 1 << 126


class Algebra(str, Enum):
    SO5 = "so5"
    SU3 = "su3"


class Method(str, Enum):
    BRUTE = "brute"
    HYPERBOLA = "hyperbola"


class Axis(str, Enum):
    FIXED_K = "fixed_k"  # k = v given, solve for the largest j
    FIXED_J = "fixed_j"  # j = v given, solve for the largest k


@dataclass(frozen=True)
class RepPoint:
    algebra: Algebra
    j: int
    k: int
    dim: int

    @classmethod
    def of(cls, algebra: Algebra, j: int, k: int) -> RepPoint:
        return cls(Algebra(algebra), j, k, dim(algebra, j, k))


@dataclass(frozen=True)
class CountQuery:
    algebra: Algebra
    x: int
    method: Method = Method.HYPERBOLA

    def __post_init__(self):
        object.__setattr__(self, "algebra", Algebra(self.algebra))
        object.__setattr__(self, "method", Method(self.method))
        if isinstance(self.x, bool) or not isinstance(self.x, int):
            raise TypeError(f"x must be an int, got {type(self.x).__name__}")
        if self.x < 0:
            raise DomainError(f"x must be non-negative, got {self.x}")
        if self.x > MAX_X:
            raise CountOverflowError(f"x = {self.x} exceeds the supported limit {MAX_X}")


def _scaled_product(algebra: Algebra, j: int, k: int) -> int:
    """Dimension times 6 (so5) or times 2 (su3)."""
    if algebra is Algebra.SO5:
        p = j * k * (j + k) * (j + 2 * k)
    else:
        p = j * k * (j + k)
    if p >= PRODUCT_LIMIT:
        raise CountOverflowError(f"product for (j, k) = ({j}, {k}) exceeds 2^126")
    return p


def _scale(algebra: Algebra) -> int:
    return 6 if algebra is Algebra.SO5 else 2


def dim(algebra: Algebra, j: int, k: int) -> int:
    """Dimension of the irreducible representation with index pair (j, k).

    >>> dim(Algebra.SO5, 2, 1), dim(Algebra.SU3, 2, 2)
    (4, 8)
    """
    algebra = Algebra(algebra)
    if j < 1 or k < 1:
        raise DomainError(f"indices must be positive, got ({j}, {k})")
    p = _scaled_product(algebra, j, k)
    d, rem = divmod(p, _scale(algebra))
    assert rem == 0, (algebra, j, k)
    return d


def integer_root(x: int, n: int) -> int:
    """Largest r >= 0 with r**n <= x."""
    if x < 0:
        raise DomainError("integer_root needs x >= 0")
    if x < 2:
        return x
    if n == 2:
        return math.isqrt(x)
    if n == 4:
        return math.isqrt(math.isqrt(x))
    r = int(round(x ** (1.0 / n)))
    # float guess is within a few units for x <= 2^126; fix it up exactly
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def integer_root4(x: int) -> int:
    """Largest r with r^4 <= x.

    >>> integer_root4(15), integer_root4(16)
    (1, 2)
    """
    return integer_root(x, 4)


def integer_root3(x: int) -> int:
    return integer_root(x, 3)


def boundary_count(algebra: Algebra, axis: Axis, v: int, x: int) -> int:
    """Number of lattice points on one row/column of the region dim <= x.

    With ``Axis.FIXED_K`` this is the largest j >= 0 with dim(j, v) <= x, i.e.
    floor of the real boundary curve; ties (dimension exactly x) count.  Found
    by exponential bracketing and bisection on the increasing integer map.
    """
    algebra, axis = Algebra(algebra), Axis(axis)
    if v < 1:
        raise DomainError(f"v must be positive, got {v}")
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    if x > MAX_X:
        raise CountOverflowError(f"x = {x} exceeds the supported limit {MAX_X}")
    target = _scale(algebra) * x

    if axis is Axis.FIXED_K:
        def p(u):
            return _scaled_product(algebra, u, v)
    else:
        def p(u):
            return _scaled_product(algebra, v, u)

    lo, hi = 0, 1
    while p(hi) <= target:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if p(mid) <= target:
            lo = mid
        else:
            hi = mid
    return lo


def _walk_columns(algebra: Algebra, x: int, k_lo: int, k_hi: int) -> int:
    """Sum over k in [k_lo, k_hi] of #{j >= 1 : dim(j, k) <= x}.

    The j-boundary is non-increasing in k, so one pointer walks it: upward
    once for the first column, then downward only.
    """
    target = _scale(algebra) * x
    j = 0
    while _scaled_product(algebra, j + 1, k_lo) <= target:
        j += 1
    total = 0
    for k in range(k_lo, k_hi + 1):
        while j > 0 and _scaled_product(algebra, j, k) > target:
            j -= 1
        if j == 0:
            break
        total += j
    return total


def _k_max(algebra: Algebra, x: int) -> int:
    """Largest k with dim(1, k) <= x (0 if none)."""
    if x < 1:
        return 0
    return boundary_count(algebra, Axis.FIXED_J, 1, x)


def _chunks(k_max: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, k_max))
    step, extra = divmod(k_max, parts)
    out, lo = [], 1
    for i in range(parts):
        hi = lo + step - 1 + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def _walk_chunk(args):
    algebra, x, lo, hi = args
    return _walk_columns(algebra, x, lo, hi)


def resolve_workers(workers: int | None = None) -> int:
    """Worker count: explicit argument, else $WITTEN_THREADS, else 1."""
    if workers is None:
        env = os.environ.get("WITTEN_THREADS")
        if env is None:
            return 1
        try:
            workers = int(env)
        except ValueError:
            raise DomainError(f"WITTEN_THREADS must be a positive integer, got {env!r}") from None
    if workers < 1:
        raise DomainError(f"worker count must be positive, got {workers}")
    return workers


def summatory_brute(algebra: Algebra, x: int, workers: int | None = None, parts: int | None = None) -> int:
    """S(x) by walking every column of the region.

    The k-range is cut into ``parts`` contiguous chunks (default: one per
    worker); chunk totals are integers, so the sum does not depend on how the
    range is cut or which process computed what.
    """
    algebra = Algebra(algebra)
    k_max = _k_max(algebra, x)
    if k_max == 0:
        return 0
    workers = resolve_workers(workers)
    chunks = _chunks(k_max, parts or workers)
    jobs = [(algebra, x, lo, hi) for lo, hi in chunks]
    if workers == 1 or len(jobs) == 1:
        return sum(map(_walk_chunk, jobs))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_walk_chunk, jobs))


def summatory_hyperbola(algebra: Algebra, x: int) -> int:
    """S(x) by the hyperbola split.

    so(5): with r = floor(x^(1/4)), every point has j <= r or k <= r, and the
    r-by-r corner lies inside the region, so
    S = sum_{k<=r} B_j(k) + sum_{j<=r} B_k(j) - r^2.
    su(3) is the same with r = floor(x^(1/3)) and a symmetric boundary.
    """
    algebra = Algebra(algebra)
    if x < 1:
        return 0
    if algebra is Algebra.SO5:
        r = integer_root4(x)
        cols = sum(boundary_count(algebra, Axis.FIXED_K, n, x) for n in range(1, r + 1))
        rows = sum(boundary_count(algebra, Axis.FIXED_J, m, x) for m in range(1, r + 1))
        return cols + rows - r * r
    r = integer_root3(x)
    cols = sum(boundary_count(algebra, Axis.FIXED_K, n, x) for n in range(1, r + 1))
    return 2 * cols - r * r


def summatory(q: CountQuery, workers: int | None = None) -> int:
    """S(x) = #{(j, k) : dim(j, k) <= x} for the query's algebra and method."""
    if q.method is Method.BRUTE:
        return summatory_brute(q.algebra, q.x, workers=workers)
    if q.method is Method.HYPERBOLA:
        return summatory_hyperbola(q.algebra, q.x)
    raise MethodError(f"unsupported method {q.method!r}")


def count(x: int, algebra: Algebra = Algebra.SO5, method: Method = Method.HYPERBOLA) -> int:
    """Shorthand for ``summatory(CountQuery(algebra, x, method))``."""
    return summatory(CountQuery(Algebra(algebra), x, Method(method)))


def rho(algebra: Algebra, n: int) -> int:
    """Number of pairs (j, k) with dim(j, k) == n.

    >>> rho(Algebra.SU3, 15)
    4
    """
    algebra = Algebra(algebra)
    if n < 1:
        raise DomainError(f"rho needs n >= 1, got {n}")
    if n > MAX_X:
        raise CountOverflowError(f"n = {n} exceeds the supported limit {MAX_X}")
    hits = 0
    for k in range(1, _k_max(algebra, n) + 1):
        j = boundary_count(algebra, Axis.FIXED_K, k, n)
        if j and dim(algebra, j, k) == n:
            hits += 1
    return hits


def divisor_summatory(x: int, method: Method = Method.HYPERBOLA) -> int:
    """D(x) = sum_{n <= x} d(n).

    Brute counts pairs (d, q) with d q <= x one column at a time; the hyperbola
    form is 2 sum_{n <= sqrt x} floor(x/n) - floor(sqrt x)^2.
    """
    method = Method(method)
    if x < 1:
        raise DomainError(f"divisor_summatory needs x >= 1, got {x}")
    if x > MAX_X:
        raise CountOverflowError(f"x = {x} exceeds the supported limit {MAX_X}")
    if method is Method.BRUTE:
        return sum(x // d for d in range(1, x + 1))
    r = math.isqrt(x)
    return 2 * sum(x // n for n in range(1, r + 1)) - r * r
