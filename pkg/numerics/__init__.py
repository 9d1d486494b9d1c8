"""
Numerics package: error function, adaptive quadrature, seeded Gaussian streams.
Everything else in the repo computes through these.
"""

from .errors import ConvergenceError, DomainError, NumericsError, ShapeError
from .quadrature import QuadratureResult, integrate_1d, integrate_2d
from .rng import RngStream, gaussian_sample, gaussian_samples
from .special import ERF_CLAMP, erf

__all__ = [
    "ConvergenceError",
    "DomainError",
    "NumericsError",
    "ShapeError",
    "QuadratureResult",
    "integrate_1d",
    "integrate_2d",
    "RngStream",
    "gaussian_sample",
    "gaussian_samples",
    "ERF_CLAMP",
    "erf",
]
