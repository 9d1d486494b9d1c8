"""
Randomized cross-checks between the three ways of computing sign correlations.

Closed-form cases compare F_closed against brute-force quadrature of w.
Monte Carlo cases compare trajectory counts against the finite-s quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass

from bell import DeltaLimitParams, F_by_quadrature, F_closed, F_finite_s
from lhv import McConfig, estimate_D
from numerics import RngStream
from phase_space import ModePairParams, TimePair

from .constants import CLOSED_FORM_REL_TOL, MC_ORACLE_CASES, MC_SIGMAS

# Case parameters are drawn from a stream no Monte Carlo chunk uses.
_CASE_STREAM_ID = 2**63


def _scale(u: float, lo: float, hi: float) -> float:
    return lo + (hi - lo) * float(u)


@dataclass(frozen=True)
class ClosedFormCase:
    q0: float
    p0: float
    tau: float
    closed: float
    quadrature: float

    @property
    def residual(self) -> float:
        """Relative difference |closed - quadrature| / |quadrature|."""
        return abs(self.closed - self.quadrature) / abs(self.quadrature)

    @property
    def passed(self) -> bool:
        return self.residual <= CLOSED_FORM_REL_TOL


@dataclass(frozen=True)
class MonteCarloCase:
    params: ModePairParams
    times: TimePair
    quadrature: float
    estimate: float
    std_error: float

    @property
    def residual(self) -> float:
        """Signed distance of the estimate from the quadrature value in standard errors."""
        if self.std_error == 0.0:
            return 0.0 if self.estimate == self.quadrature else float("inf")
        return (self.estimate - self.quadrature) / self.std_error

    @property
    def passed(self) -> bool:
        return abs(self.residual) <= MC_SIGMAS


@dataclass(frozen=True)
class OracleReport:
    closed_form: tuple[ClosedFormCase, ...]
    monte_carlo: tuple[MonteCarloCase, ...]

    @property
    def failures(self) -> int:
        return sum(1 for c in self.closed_form if not c.passed) + sum(
            1 for c in self.monte_carlo if not c.passed
        )

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def max_closed_form_residual(self) -> float:
        return max((c.residual for c in self.closed_form), default=0.0)


def run_oracle_suite(
    seed: int,
    n_cases: int,
    n_samples: int,
    n_chunks: int = 1,
    max_workers: int = 1,
) -> OracleReport:
    """
    n_cases closed-form checks with q0, p0 in [-3, 3] and tau in [0, 5], then
    min(n_cases, 20) Monte Carlo checks with s in [0.1, 1], q0, p0 in [-2, 2]
    and t1, t2 in [0, 3]. Case i of the Monte Carlo part is sampled with seed
    seed + 1 + i.
    """
    if n_cases < 0:
        raise ValueError(f"n_cases must be >= 0, got {n_cases!r}")
    stream = RngStream(seed, _CASE_STREAM_ID)

    closed_cases = []
    for _ in range(n_cases):
        u = stream.uniforms(3)
        params = DeltaLimitParams(_scale(u[0], -3.0, 3.0), _scale(u[1], -3.0, 3.0))
        tau = _scale(u[2], 0.0, 5.0)
        closed_cases.append(ClosedFormCase(
            q0=params.q0,
            p0=params.p0,
            tau=tau,
            closed=F_closed(tau, params),
            quadrature=F_by_quadrature(tau, params).value,
        ))

    mc_cases = []
    for i in range(min(n_cases, MC_ORACLE_CASES)):
        u = stream.uniforms(5)
        params = ModePairParams(
            q0=_scale(u[0], -2.0, 2.0),
            p0=_scale(u[1], -2.0, 2.0),
            s=_scale(u[2], 0.1, 1.0),
        )
        times = TimePair(_scale(u[3], 0.0, 3.0), _scale(u[4], 0.0, 3.0))
        mc = McConfig(n_samples, seed=(seed + 1 + i) % 2**64, n_chunks=n_chunks, max_workers=max_workers)
        estimate = estimate_D(params, times, mc)
        mc_cases.append(MonteCarloCase(
            params=params,
            times=times,
            quadrature=F_finite_s(times, params).value,
            estimate=estimate.mean,
            std_error=estimate.std_error,
        ))

    return OracleReport(tuple(closed_cases), tuple(mc_cases))
