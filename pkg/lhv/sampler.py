"""The finite-s Wigner density read as a classical ensemble of phase points."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from numerics import RngStream
from phase_space import ModePairParams

_HALF_SQRT = math.sqrt(0.5)


@dataclass(frozen=True)
class PhasePoint:
    """One hidden-variable value in output coordinates."""

    q1: float
    p1: float
    q2: float
    p2: float

    def position(self, particle: int) -> float:
        return self.q1 if _check_particle(particle) == 1 else self.q2

    def momentum(self, particle: int) -> float:
        return self.p1 if _check_particle(particle) == 1 else self.p2


def _check_particle(particle: int) -> int:
    if particle not in (1, 2):
        raise ValueError(f"particle must be 1 or 2, got {particle!r}")
    return particle


def sample_batch(params: ModePairParams, stream: RngStream, n: int) -> np.ndarray:
    """
    n phase points as an (n, 4) array of (q1, p1, q2, p2).

    Each row consumes four normals in the order q, p, Q, P: (q, p) from the
    coherent density (variance 1/2 about (q0, p0)), (Q, P) from the squeezed
    density (variances 1/(2 s^2) and s^2/2). Row k of a batch matches, up to
    rounding, the k-th point from repeated sample_initial calls.
    """
    z = stream.standard_normals(4 * n).reshape(n, 4)
    q = params.q0 + _HALF_SQRT * z[:, 0]
    p = params.p0 + _HALF_SQRT * z[:, 1]
    Q = _HALF_SQRT / params.s * z[:, 2]
    P = _HALF_SQRT * params.s * z[:, 3]
    # Same map as phase_space.BEAMSPLITTER, written out elementwise.
    out = np.empty_like(z)
    out[:, 0] = _HALF_SQRT * (q + Q)
    out[:, 1] = _HALF_SQRT * (p + P)
    out[:, 2] = _HALF_SQRT * (Q - q)
    out[:, 3] = _HALF_SQRT * (P - p)
    return out


def sample_initial(params: ModePairParams, stream: RngStream) -> PhasePoint:
    """Draw one initial phase point."""
    q1, p1, q2, p2 = (float(v) for v in sample_batch(params, stream, 1)[0])
    return PhasePoint(q1, p1, q2, p2)


def trajectory_sign(point: PhasePoint, particle: int, t: float) -> int:
    """Sign of q_k + p_k t for the free trajectory; an exact zero counts as +1."""
    x = point.position(particle) + point.momentum(particle) * t
    return 1 if x >= 0 else -1


def trajectory_signs(batch: np.ndarray, particle: int, t: float) -> np.ndarray:
    """Vectorised trajectory_sign over a sample_batch array (int8, values +-1)."""
    col = 0 if _check_particle(particle) == 1 else 2
    x = batch[:, col] + batch[:, col + 1] * t
    return np.where(x >= 0, 1, -1).astype(np.int8)
