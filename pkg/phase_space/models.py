"""Parameter value objects: the coherent/squeezed mode pair and a measurement time pair."""

from __future__ import annotations

import math
from dataclasses import dataclass

from numerics import DomainError


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class ModePairParams:
    """Coherent-state centre (q0, p0) and squeezing s of the second mode."""

    q0: float
    p0: float
    s: float

    def __post_init__(self) -> None:
        _require_finite(q0=self.q0, p0=self.p0, s=self.s)
        if self.s <= 0:
            raise DomainError(f"squeezing s must be > 0, got {self.s!r}")


@dataclass(frozen=True)
class TimePair:
    """Local measurement times of particle 1 and particle 2."""

    t1: float
    t2: float

    def __post_init__(self) -> None:
        _require_finite(t1=self.t1, t2=self.t2)

    @property
    def tau(self) -> float:
        """Mean time (t1 + t2) / 2, the only time the delta-limit closed form depends on."""
        return 0.5 * (self.t1 + self.t2)

    @classmethod
    def symmetric(cls, tau: float) -> TimePair:
        return cls(tau, tau)

    def __add__(self, other: TimePair) -> TimePair:
        if not isinstance(other, TimePair):
            return NotImplemented
        return TimePair(self.t1 + other.t1, self.t2 + other.t2)
