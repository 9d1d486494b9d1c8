"""
Adaptive Gauss-Kronrod quadrature (7-point Gauss embedded in 15-point Kronrod).

Intervals are kept on a heap keyed by their error estimate; the worst one is
bisected until the summed error meets max(abs_tol, rel_tol * |value|) or the
evaluation budget runs out. The 7-point Gauss rule alone is exact for
polynomials up to degree 13, so the degree-7 floor holds on the first pass.

Integrands are called with a numpy array of abscissae and must return an
array of the same shape (a scalar return is broadcast, so `lambda x: 1.0`
works).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

# Kronrod abscissae (descending, last one is the centre) and weights.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
# Gauss weights for the abscissae _XGK[1], _XGK[3], _XGK[5], _XGK[7].
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_WEIGHTS = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    _GAUSS_WEIGHTS[_i] = _w
    _GAUSS_WEIGHTS[14 - _i] = _w
_GAUSS_WEIGHTS[7] = _WG[3]

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny

DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_EVALUATIONS = 150_000


@dataclass(frozen=True)
class QuadratureResult:
    """Value of an integral with its error estimate and integrand call count."""

    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self) -> None:
        if self.error_estimate < 0:
            raise ValueError("error_estimate must be nonnegative")
        if self.evaluations < 1:
            raise ValueError("evaluations must be at least 1")


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    values = np.asarray(f(x), dtype=float)
    if values.shape != x.shape:
        values = np.broadcast_to(values, x.shape)
    return values


def _kronrod_15(f: Callable, a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod panel on [a, b]. Returns (estimate, error) with the QUADPACK error scaling."""
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fv = _evaluate(f, centre + half * _NODES)
    if not np.all(np.isfinite(fv)):
        raise DomainError(f"integrand is not finite on [{a}, {b}]")

    resk = float(np.dot(_KRONROD_WEIGHTS, fv))
    resg = float(np.dot(_GAUSS_WEIGHTS, fv))
    reskh = 0.5 * resk
    resabs = float(np.dot(_KRONROD_WEIGHTS, np.abs(fv))) * abs(half)
    resasc = float(np.dot(_KRONROD_WEIGHTS, np.abs(fv - reskh))) * abs(half)

    err = abs((resk - resg) * half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > _TINY / (50.0 * _EPS):
        err = max(50.0 * _EPS * resabs, err)
    return resk * half, err


def integrate_1d(
    f: Callable,
    a: float,
    b: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS,
) -> QuadratureResult:
    """
    Integrate f over the finite interval [a, b].

    Semi-infinite ranges are the caller's job: truncate at mean +- 10
    standard deviations of the dominating Gaussian factor.

    Raises:
        DomainError: if a >= b, a limit is not finite, or f is not finite.
        ConvergenceError: if the budget runs out; `best` holds the estimate.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration limits must be finite, got [{a}, {b}]")
    if not a < b:
        raise DomainError(f"integration requires a < b, got [{a}, {b}]")

    value, err = _kronrod_15(f, a, b)
    evaluations = 15
    # Heap entries: (-error, a, b, value, error)
    heap = [(-err, a, b, value, err)]
    total_value, total_err = value, err

    while total_err > max(abs_tol, rel_tol * abs(total_value)):
        if evaluations + 30 > max_evaluations:
            best = QuadratureResult(total_value, total_err, evaluations)
            raise ConvergenceError(
                f"quadrature on [{a}, {b}] did not reach tolerance after {evaluations} evaluations "
                f"(estimate {total_value!r}, error {total_err:.3e})",
                best,
            )
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # Interval can no longer be split in floating point.
            heapq.heappush(heap, (0.0, lo, hi, v, e))
            best = QuadratureResult(total_value, total_err, evaluations)
            raise ConvergenceError(
                f"quadrature on [{a}, {b}] hit roundoff near x={mid!r}", best
            )
        v1, e1 = _kronrod_15(f, lo, mid)
        v2, e2 = _kronrod_15(f, mid, hi)
        evaluations += 30
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
        total_value += v1 + v2 - v
        total_err += e1 + e2 - e

    total_value = math.fsum(item[3] for item in heap)
    total_err = math.fsum(item[4] for item in heap)
    return QuadratureResult(total_value, total_err, evaluations)


def integrate_2d(
    f: Callable,
    domain: tuple[float, float, float, float],
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS,
) -> QuadratureResult:
    """
    Integrate f(x, y) over the rectangle (x_min, x_max, y_min, y_max).

    Nested integrate_1d: the outer rule gets half the absolute tolerance,
    each inner integral gets the other half spread over the outer width.
    f is called with a scalar x and an array of y.
    """
    x_min, x_max, y_min, y_max = domain
    width = x_max - x_min
    if not width > 0:
        raise DomainError(f"integration requires x_min < x_max, got {domain}")
    inner_abs = 0.5 * abs_tol / width
    calls = 0
    worst_inner = 0.0

    def outer(xs: np.ndarray) -> np.ndarray:
        nonlocal calls, worst_inner
        out = np.empty_like(xs)
        for i, x in enumerate(xs):
            inner = integrate_1d(
                lambda y: f(x, y), y_min, y_max, inner_abs, rel_tol, max_evaluations
            )
            calls += inner.evaluations
            worst_inner = max(worst_inner, inner.error_estimate)
            out[i] = inner.value
        return out

    result = integrate_1d(outer, x_min, x_max, 0.5 * abs_tol, rel_tol, max_evaluations)
    return QuadratureResult(
        result.value,
        result.error_estimate + width * worst_inner,
        max(calls, 1),
    )
