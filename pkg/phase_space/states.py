"""
Gaussian Wigner densities as (mean, covariance, log_weight) values.

Phase-space coordinates are ordered (q1, p1, q2, p2, ...). A Wigner
exponent -(q - q0)^2 - (p - p0)^2 corresponds to variance 1/2 per
quadrature; every constructor states its covariance in that convention.
Degenerate (delta-like) covariances are rejected: the unnormalizable
delta limit only exists in the closed-form code of the `bell` package.
"""

from __future__ import annotations

import math

import numpy as np

from numerics import DomainError, ShapeError

from .models import ModePairParams

SYMMETRY_TOLERANCE = 1e-12


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.flags.writeable = False
    return array


class GaussianDensity:
    """
    Weighted Gaussian density exp(log_weight) * N(mean, covariance).

    Immutable; every transformation returns a new instance.
    """

    __slots__ = ("_mean", "_covariance", "_log_weight", "_cholesky")

    def __init__(self, mean, covariance, log_weight: float = 0.0) -> None:
        mean = np.asarray(mean, dtype=float).reshape(-1)
        covariance = np.asarray(covariance, dtype=float)
        dim = mean.shape[0]
        if covariance.shape != (dim, dim):
            raise ShapeError(f"covariance shape {covariance.shape} does not match mean length {dim}")
        if not np.all(np.isfinite(mean)):
            raise DomainError("mean entries must be finite")
        if not np.all(np.isfinite(covariance)):
            raise DomainError("covariance entries must be finite")
        if not math.isfinite(log_weight):
            raise DomainError(f"log_weight must be finite, got {log_weight!r}")

        scale = max(1.0, float(np.max(np.abs(covariance))))
        if np.max(np.abs(covariance - covariance.T)) > SYMMETRY_TOLERANCE * scale:
            raise DomainError("covariance is not symmetric")
        covariance = 0.5 * (covariance + covariance.T)
        try:
            cholesky = np.linalg.cholesky(covariance)
        except np.linalg.LinAlgError as e:
            raise DomainError(f"covariance is not positive definite: {e}") from e

        self._mean = _frozen(mean)
        self._covariance = _frozen(covariance)
        self._log_weight = float(log_weight)
        self._cholesky = _frozen(cholesky)

    @property
    def mean(self) -> np.ndarray:
        return self._mean

    @property
    def covariance(self) -> np.ndarray:
        return self._covariance

    @property
    def log_weight(self) -> float:
        return self._log_weight

    @property
    def weight(self) -> float:
        """Total integral of the density."""
        return math.exp(self._log_weight)

    @property
    def dim(self) -> int:
        return self._mean.shape[0]

    def density(self, points) -> np.ndarray | float:
        """Density at one point (shape (dim,)) or many (shape (..., dim))."""
        x = np.asarray(points, dtype=float)
        if x.shape[-1:] != (self.dim,):
            raise ShapeError(f"point dimension {x.shape[-1:]} does not match density dimension {self.dim}")
        diff = x - self._mean
        # Solve L y = diff for every point at once.
        y = np.linalg.solve(self._cholesky, diff.reshape(-1, self.dim).T).T
        quad = np.sum(y * y, axis=-1).reshape(x.shape[:-1])
        log_norm = -0.5 * self.dim * math.log(2.0 * math.pi) - float(np.sum(np.log(np.diag(self._cholesky))))
        values = np.exp(self._log_weight + log_norm - 0.5 * quad)
        if values.ndim == 0:
            return float(values)
        return values

    def _same_data(self, other: GaussianDensity) -> bool:
        return (
            self._log_weight == other._log_weight
            and np.array_equal(self._mean, other._mean)
            and np.array_equal(self._covariance, other._covariance)
        )

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._same_data(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, mean={self._mean.tolist()!r}, log_weight={self._log_weight!r})"


class GaussianState(GaussianDensity):
    """Gaussian Wigner function on 2n-dimensional phase space, ordered (q1, p1, ..., qn, pn)."""

    __slots__ = ()

    def __init__(self, mean, covariance, log_weight: float = 0.0) -> None:
        super().__init__(mean, covariance, log_weight)
        if self.dim % 2:
            raise ShapeError(f"phase-space dimension must be even, got {self.dim}")

    @property
    def n_modes(self) -> int:
        return self.dim // 2


def evaluate_density(state: GaussianDensity, point) -> np.ndarray | float:
    """exp(log_weight) times the Gaussian density at `point`; always >= 0."""
    return state.density(point)


def coherent_wigner(q0: float, p0: float) -> GaussianState:
    """(1/pi) exp[-(q - q0)^2 - (p - p0)^2]: mean (q0, p0), covariance diag(1/2, 1/2)."""
    if not (math.isfinite(q0) and math.isfinite(p0)):
        raise DomainError(f"coherent state centre must be finite, got ({q0!r}, {p0!r})")
    return GaussianState([q0, p0], np.diag([0.5, 0.5]))


def squeezed_vacuum_wigner(s: float) -> GaussianState:
    """(1/pi) exp[-(sQ)^2 - (P/s)^2]: mean 0, covariance diag(1/(2 s^2), s^2/2)."""
    if not math.isfinite(s) or s <= 0:
        raise DomainError(f"squeezing s must be > 0, got {s!r}")
    return GaussianState([0.0, 0.0], np.diag([0.5 / (s * s), 0.5 * s * s]))


def tensor(a: GaussianState, b: GaussianState) -> GaussianState:
    """Product state: means concatenated, block-diagonal covariance, weights multiplied."""
    covariance = np.zeros((a.dim + b.dim, a.dim + b.dim))
    covariance[: a.dim, : a.dim] = a.covariance
    covariance[a.dim :, a.dim :] = b.covariance
    return GaussianState(
        np.concatenate([a.mean, b.mean]),
        covariance,
        a.log_weight + b.log_weight,
    )


def input_state(params: ModePairParams) -> GaussianState:
    """Coherent mode (q, p) tensored with the squeezed mode (Q, P)."""
    return tensor(coherent_wigner(params.q0, params.p0), squeezed_vacuum_wigner(params.s))
