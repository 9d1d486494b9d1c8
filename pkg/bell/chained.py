"""
Four-time sign inequality.

For +-1 outcomes A, A' (particle 1 at times a, a') and B, B' (particle 2 at
b, b'), 1[A != B] <= 1[A != B'] + 1[A' != B'] + 1[A' != B] holds outcome by
outcome, so any local model gives

    C = D(a, b') + D(a', b') + D(a', b) - D(a, b) >= 0.

Choosing a = b = 3 tau and a' = b' = -tau with a tau-only D turns this into
2 F(tau) + F(-tau) - F(3 tau); it coincides with 3 F(tau) - F(3 tau) only
when F is even in tau.
"""

from __future__ import annotations

from dataclasses import dataclass

from phase_space import ModePairParams, TimePair

from .closed_form import DeltaLimitParams, F_closed
from .finite_s import F_finite_s
from .results import Method, SignCorrelationResult


@dataclass(frozen=True)
class ChainedTimes:
    """Two settings per side: particle 1 at a or a_alt, particle 2 at b or b_alt."""

    a: float
    a_alt: float
    b: float
    b_alt: float

    @classmethod
    def reflected(cls, tau: float) -> ChainedTimes:
        """a = b = 3 tau, a' = b' = -tau: pair means 3 tau, tau, -tau, tau."""
        return cls(3.0 * tau, -tau, 3.0 * tau, -tau)

    def terms(self) -> tuple[tuple[TimePair, float], ...]:
        """(time pair, coefficient) for each D in the combination."""
        return (
            (TimePair(self.a, self.b_alt), 1.0),
            (TimePair(self.a_alt, self.b_alt), 1.0),
            (TimePair(self.a_alt, self.b), 1.0),
            (TimePair(self.a, self.b), -1.0),
        )


def chained_closed(times: ChainedTimes, params: DeltaLimitParams) -> SignCorrelationResult:
    """The four-time combination with D(t1, t2) = F_closed((t1 + t2)/2). Scales with K."""
    value = sum(coef * F_closed(pair.tau, params) for pair, coef in times.terms())
    return SignCorrelationResult(value, Method.CLOSED_FORM, 0.0, normalized=False)


def chained_finite_s(times: ChainedTimes, params: ModePairParams) -> SignCorrelationResult:
    """The four-time combination from normalized finite-s probabilities."""
    value = 0.0
    error = 0.0
    for pair, coef in times.terms():
        d = F_finite_s(pair, params)
        value += coef * d.value
        error += abs(coef) * d.error_estimate
    return SignCorrelationResult(value, Method.QUADRATURE, error, normalized=False)
