"""Linear pushforwards of Gaussian states: beam splitter, free flight, marginals."""

from __future__ import annotations

import math

import numpy as np

from numerics import ShapeError

from .models import ModePairParams, TimePair
from .states import GaussianDensity, GaussianState, input_state

_R = 1.0 / math.sqrt(2.0)

# (q, p, Q, P) -> (q1, p1, q2, p2) with q1 = (q + Q)/sqrt2, q2 = (Q - q)/sqrt2
# and the same for momenta. Orthogonal and symplectic.
BEAMSPLITTER = np.array([
    [_R, 0.0, _R, 0.0],
    [0.0, _R, 0.0, _R],
    [-_R, 0.0, _R, 0.0],
    [0.0, -_R, 0.0, _R],
])
BEAMSPLITTER.flags.writeable = False

POSITION_INDICES = (0, 2)


def _require_modes(state: GaussianState, n_modes: int) -> None:
    if not isinstance(state, GaussianState) or state.n_modes != n_modes:
        found = getattr(state, "n_modes", None)
        raise ShapeError(f"expected a {n_modes}-mode GaussianState, got {found!r} modes")


def pushforward(state: GaussianState, matrix: np.ndarray) -> GaussianState:
    """
    Density of M x when x ~ state. Mean maps linearly, covariance by
    congruence (re-symmetrised). Total weight is unchanged.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (state.dim, state.dim):
        raise ShapeError(f"map shape {matrix.shape} does not match state dimension {state.dim}")
    covariance = matrix @ state.covariance @ matrix.T
    return GaussianState(matrix @ state.mean, 0.5 * (covariance + covariance.T), state.log_weight)


def beamsplitter_transform(state: GaussianState) -> GaussianState:
    """Express a (q, p, Q, P) product state in the output variables (q1, p1, q2, p2)."""
    _require_modes(state, 2)
    return pushforward(state, BEAMSPLITTER)


def shear_matrix(t: TimePair) -> np.ndarray:
    """Free flight with unit masses: q_k -> q_k + p_k t_k, momenta fixed."""
    return np.array([
        [1.0, t.t1, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, t.t2],
        [0.0, 0.0, 0.0, 1.0],
    ])


def free_evolution(state: GaussianState, t: TimePair) -> GaussianState:
    """Two-time Wigner function W(q1 - p1 t1, q2 - p2 t2, p1, p2) as a Gaussian state."""
    _require_modes(state, 2)
    return pushforward(state, shear_matrix(t))


def marginal(state: GaussianDensity, indices) -> GaussianDensity:
    """Integrate out every coordinate not listed in `indices` (exact for Gaussians)."""
    idx = list(indices)
    if not idx or any(not 0 <= i < state.dim for i in idx) or len(set(idx)) != len(idx):
        raise ShapeError(f"invalid marginal indices {indices!r} for dimension {state.dim}")
    return GaussianDensity(
        state.mean[idx],
        state.covariance[np.ix_(idx, idx)],
        state.log_weight,
    )


def marginal_positions(state: GaussianState) -> GaussianDensity:
    """Joint (q1, q2) distribution: momentum rows and columns removed."""
    _require_modes(state, 2)
    return marginal(state, POSITION_INDICES)


def epr_state(params: ModePairParams) -> GaussianState:
    """Coherent x squeezed-vacuum product written in output variables."""
    return beamsplitter_transform(input_state(params))


def position_marginal_at(params: ModePairParams, t: TimePair) -> GaussianDensity:
    """The (q1, q2) distribution at measurement times t."""
    return marginal_positions(free_evolution(epr_state(params), t))
