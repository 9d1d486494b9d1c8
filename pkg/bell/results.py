"""Result type shared by the closed-form, quadrature and Monte Carlo evaluations."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# Slack for floating-point roundoff on top of the reported error estimate.
_BOUND_SLACK = 1e-12


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class SignCorrelationResult:
    """A D, F or S value together with how it was computed and how far it can be trusted."""

    value: float
    method: Method
    error_estimate: float
    normalized: bool

    def __post_init__(self) -> None:
        if not self.error_estimate >= 0:
            raise ValueError(f"error_estimate must be >= 0, got {self.error_estimate!r}")
        if self.normalized:
            slack = self.error_estimate + _BOUND_SLACK
            if not -slack <= self.value <= 1.0 + slack:
                raise ValueError(f"normalized probability {self.value!r} outside [0, 1]")

    def combine(self, other: SignCorrelationResult, a: float, b: float) -> SignCorrelationResult:
        """a * self + b * other; absolute errors add. The result is no longer a probability."""
        return SignCorrelationResult(
            value=a * self.value + b * other.value,
            method=self.method,
            error_estimate=abs(a) * self.error_estimate + abs(b) * other.error_estimate,
            normalized=False,
        )
