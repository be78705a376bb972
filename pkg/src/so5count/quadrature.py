"""Adaptive Gauss--Legendre quadrature on a finite interval."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, ToleranceError


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    nodes: int


@lru_cache(maxsize=8)
def _rule(order: int):
    return np.polynomial.legendre.leggauss(order)


def _panel(f, a: float, b: float, order: int) -> float:
    x, w = _rule(order)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return float(half * np.dot(w, f(mid + half * x)))


def _rounding(value: float) -> float:
    return 8 * np.finfo(float).eps * abs(value)


def adaptive_gauss_legendre(f, a: float, b: float, tol: float = 1e-12,
                            order: int = 15, max_nodes: int = 200_000) -> QuadratureResult:
    """Integrate a vectorised ``f`` over [a, b] to absolute tolerance ``tol``.

    Each panel is compared against the sum over its two halves; the halves are
    kept as the estimate and their difference from the whole-panel value as
    the panel error.  The panel with the largest error is split until the total
    is below ``tol``.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if b < a:
        r = adaptive_gauss_legendre(f, b, a, tol, order, max_nodes)
        return QuadratureResult(-r.value, r.error_estimate, r.nodes)

    def assess(lo, hi):
        mid = 0.5 * (lo + hi)
        coarse = _panel(f, lo, hi, order)
        fine = _panel(f, lo, mid, order) + _panel(f, mid, hi, order)
        return abs(fine - coarse), fine

    nodes = 3 * order
    err, val = assess(a, b)
    heap = [(-err, a, b, val)]
    total_err = err + _rounding(val)
    while total_err > tol:
        if nodes + 6 * order > max_nodes:
            raise ToleranceError(
                f"tolerance {tol:g} not reached with {nodes} nodes (estimate {total_err:.3g})")
        neg_err, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        left, right = assess(lo, mid), assess(mid, hi)
        nodes += 6 * order
        heapq.heappush(heap, (-left[0], lo, mid, left[1]))
        heapq.heappush(heap, (-right[0], mid, hi, right[1]))
        total_err = sum(-e for e, *_ in heap) + _rounding(sum(v for *_, v in heap))

    value = float(np.sum(sorted((v for *_, v in heap), key=abs)))
    return QuadratureResult(value, float(total_err), nodes)
