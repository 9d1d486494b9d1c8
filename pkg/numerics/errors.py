"""Exception types shared by the numerical layers."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .quadrature import QuadratureResult


class NumericsError(Exception):
    """Base class for every error raised by the numerical code."""


class DomainError(NumericsError, ValueError):
    """An argument lies outside the domain of the operation."""


class ShapeError(NumericsError, ValueError):
    """Array dimensions or mode counts do not match."""


class ConvergenceError(NumericsError, RuntimeError):
    """Adaptive quadrature ran out of budget. Carries the best estimate."""

    def __init__(self, message: str, best: QuadratureResult) -> None:
        super().__init__(message)
        self.best = best
