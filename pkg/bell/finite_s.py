"""
Normalized sign correlations of the finite-s state.

The position marginal is a proper 2D Gaussian, so D(t1, t2) is a true
probability. The opposite-sign mass is computed by integrating over q1
with q2 | q1 handled in closed form through erf; only the outer variable
is integrated numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from numerics import DomainError, ShapeError, erf, integrate_1d
from phase_space import GaussianDensity, ModePairParams, TimePair, position_marginal_at

from .closed_form import TRUNCATION_SIGMAS, DeltaLimitParams, F_closed
from .results import Method, SignCorrelationResult

_INV_SQRT_2 = 1.0 / math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
# Denominators of effective_K below this are treated as zero.
_DEGENERATE_DENOMINATOR = 1e-300

ABS_TOL = 1e-13
REL_TOL = 1e-11


def opposite_sign_probability(
    marginal: GaussianDensity,
    abs_tol: float = ABS_TOL,
    rel_tol: float = REL_TOL,
) -> SignCorrelationResult:
    """
    Mass of {q1 > 0, q2 < 0} U {q1 < 0, q2 > 0} for a 2D Gaussian.

    q1 = m1 + sd1 * z with z standard normal; given q1, q2 is normal with
    mean m2 + (c/v1)(q1 - m1) and variance v2 - c^2/v1, so P(q2 < 0 | q1)
    is an erf. The z integral is split at the sign change of q1 and
    truncated at +-10.
    """
    if marginal.dim != 2:
        raise ShapeError(f"opposite-sign probability needs a 2D density, got dimension {marginal.dim}")
    m1, m2 = (float(v) for v in marginal.mean)
    v1 = float(marginal.covariance[0, 0])
    v2 = float(marginal.covariance[1, 1])
    c = float(marginal.covariance[0, 1])
    sd1 = math.sqrt(v1)
    cond_sd = math.sqrt(max(v2 - c * c / v1, 0.0))
    if cond_sd == 0.0:
        raise DomainError("conditional variance of q2 vanished; marginal is degenerate")
    slope = c / v1 * sd1
    scale = _INV_SQRT_2 / cond_sd

    def q2_negative(z):
        # P(q2 < 0 | q1 = m1 + sd1 z)
        return 0.5 * (1.0 - erf((m2 + slope * z) * scale))

    def upper_branch(z):
        return _INV_SQRT_2PI * np.exp(-0.5 * z * z) * q2_negative(z)

    def lower_branch(z):
        return _INV_SQRT_2PI * np.exp(-0.5 * z * z) * (1.0 - q2_negative(z))

    z_zero = -m1 / sd1
    value = 0.0
    error = 0.0
    evaluations = 0
    lo, hi = -TRUNCATION_SIGMAS, TRUNCATION_SIGMAS
    if z_zero > lo:
        part = integrate_1d(lower_branch, lo, min(z_zero, hi), abs_tol, rel_tol)
        value += part.value
        error += part.error_estimate
        evaluations += part.evaluations
    if z_zero < hi:
        part = integrate_1d(upper_branch, max(z_zero, lo), hi, abs_tol, rel_tol)
        value += part.value
        error += part.error_estimate
        evaluations += part.evaluations

    weight = marginal.weight
    return SignCorrelationResult(
        value=weight * value,
        method=Method.QUADRATURE,
        error_estimate=weight * error,
        normalized=marginal.log_weight == 0.0,
    )


def F_finite_s(t: TimePair, params: ModePairParams) -> SignCorrelationResult:
    """Probability that the positions measured at times t have opposite signs."""
    return opposite_sign_probability(position_marginal_at(params, t))


def S_finite_s(tau: float, params: ModePairParams) -> SignCorrelationResult:
    """3 F(tau, tau) - F(3 tau, 3 tau) built from normalized probabilities."""
    near = F_finite_s(TimePair.symmetric(tau), params)
    far = F_finite_s(TimePair.symmetric(3.0 * tau), params)
    return near.combine(far, 3.0, -1.0)


def effective_K(tau: float, params: ModePairParams, f_finite: SignCorrelationResult | None = None) -> float:
    """
    The factor K(tau) that would make the unnormalized closed form equal the
    true probability at this tau: F_finite_s((tau, tau)) / F_closed(tau; K=1).

    A precomputed F_finite_s value may be passed to avoid recomputing it.
    """
    denominator = F_closed(tau, DeltaLimitParams(params.q0, params.p0, 1.0))
    if not denominator > _DEGENERATE_DENOMINATOR:
        raise DomainError(f"closed-form F vanishes at tau={tau!r}")
    if f_finite is None:
        f_finite = F_finite_s(TimePair.symmetric(tau), params)
    return f_finite.value / denominator


@dataclass(frozen=True)
class AsymmetryScan:
    """F at (tau + delta, tau - delta) for several delta, against the symmetric value."""

    tau: float
    reference: SignCorrelationResult
    deltas: tuple[float, ...]
    values: tuple[SignCorrelationResult, ...]

    @property
    def deviations(self) -> tuple[float, ...]:
        return tuple(v.value - self.reference.value for v in self.values)

    @property
    def max_deviation(self) -> float:
        return max((abs(d) for d in self.deviations), default=0.0)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "delta": self.deltas,
            "t1": [self.tau + d for d in self.deltas],
            "t2": [self.tau - d for d in self.deltas],
            "F": [v.value for v in self.values],
            "deviation": self.deviations,
        })


def time_asymmetry_scan(tau: float, deltas, params: ModePairParams) -> AsymmetryScan:
    """
    How far F(t1, t2) departs from depending on tau = (t1 + t2)/2 alone at
    finite s. In the delta limit every deviation is zero.
    """
    reference = F_finite_s(TimePair.symmetric(tau), params)
    deltas = tuple(float(d) for d in deltas)
    values = tuple(
        reference if d == 0.0 else F_finite_s(TimePair(tau + d, tau - d), params)
        for d in deltas
    )
    return AsymmetryScan(tau=tau, reference=reference, deltas=deltas, values=values)
