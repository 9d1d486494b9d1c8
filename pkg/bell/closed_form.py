"""
Delta-limit sign correlations.

With the squeezed mode replaced by K * delta(P), the joint position
distribution depends on t1, t2 only through tau = (t1 + t2)/2 and on the
positions only through the difference coordinate q. Everything here is
linear in K: K multiplies both terms of F, because w(q, tau) is itself
proportional to K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from numerics import DomainError, erf, integrate_1d

_SQRT_PI = math.sqrt(math.pi)
TRUNCATION_SIGMAS = 10.0


@dataclass(frozen=True)
class DeltaLimitParams:
    """Coherent centre (q0, p0) and the multiplicative constant K of the delta-limit state."""

    q0: float
    p0: float
    K: float = 1.0

    def __post_init__(self) -> None:
        for name in ("q0", "p0", "K"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.K <= 0:
            raise DomainError(f"K must be > 0, got {self.K!r}")

    def q0_at(self, tau: float) -> float:
        """Centre of the difference coordinate at mean time tau: q0 + p0 tau."""
        return self.q0 + self.p0 * tau

    def with_K(self, K: float) -> DeltaLimitParams:
        return DeltaLimitParams(self.q0, self.p0, K)


def w_closed(q, tau: float, params: DeltaLimitParams):
    """(K/sqrt(pi)) (1 + tau^2)^(-1/2) exp[-(q - q0(tau))^2 / (1 + tau^2)]. Accepts arrays."""
    spread = 1.0 + tau * tau
    centre = params.q0_at(tau)
    return params.K / (_SQRT_PI * math.sqrt(spread)) * np.exp(-((np.asarray(q) - centre) ** 2) / spread)


def F_closed(tau: float, params: DeltaLimitParams) -> float:
    """Unnormalized opposite-sign 'probability' K [2 sqrt(1+tau^2)/sqrt(pi) e^{-m^2/(1+tau^2)} + 2 m erf(m/sqrt(1+tau^2))]."""
    root = math.sqrt(1.0 + tau * tau)
    m = params.q0_at(tau)
    return params.K * (
        2.0 * root / _SQRT_PI * math.exp(-(m * m) / (root * root))
        + 2.0 * m * erf(m / root)
    )


def S_closed(tau: float, params: DeltaLimitParams) -> float:
    """Bell functional 3 F(tau) - F(3 tau)."""
    return 3.0 * F_closed(tau, params) - F_closed(3.0 * tau, params)


def F_by_quadrature(tau: float, params: DeltaLimitParams, rel_tol: float = 1e-12):
    """
    Brute-force 2 * int_0^inf q [w(q, tau) + w(-q, tau)] dq, truncated where
    the Gaussian factor of w is 10 standard deviations past its centre.
    Independent of the closed form; used to check it.
    """
    sigma = math.sqrt(0.5 * (1.0 + tau * tau))
    upper = abs(params.q0_at(tau)) + TRUNCATION_SIGMAS * sigma

    def integrand(q):
        return 2.0 * q * (w_closed(q, tau, params) + w_closed(-q, tau, params))

    return integrate_1d(integrand, 0.0, upper, abs_tol=1e-15 * params.K, rel_tol=rel_tol)


def asymptotic_slope(params: DeltaLimitParams) -> float:
    """lim F(tau)/tau for tau -> inf: K [2|p0| erf(|p0|) + (2/sqrt(pi)) e^{-p0^2}]."""
    p = abs(params.p0)
    return params.K * (2.0 * p * erf(p) + 2.0 / _SQRT_PI * math.exp(-p * p))


def _bisect(f, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Root of f in [lo, hi]; f(lo) and f(hi) must differ in sign."""
    f_lo = f(lo)
    if f_lo * f(hi) > 0:
        raise DomainError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0 or hi - lo < tol:
            return mid
        if f_mid * f_lo > 0:
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def unit_crossing_tau(params: DeltaLimitParams, tau_max: float = 100.0, grid_points: int = 2001) -> float | None:
    """
    Smallest tau >= 0 at which F exceeds 1, i.e. where the unnormalized
    'probability' stops being one. None if F stays <= 1 on [0, tau_max].
    """
    excess = lambda tau: F_closed(tau, params) - 1.0
    if excess(0.0) > 0:
        return 0.0
    grid = np.linspace(0.0, tau_max, grid_points)
    prev = 0.0
    for tau in grid[1:]:
        if excess(float(tau)) > 0:
            return _bisect(excess, prev, float(tau))
        prev = float(tau)
    return None
