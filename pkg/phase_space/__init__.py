"""
Gaussian phase-space layer: states, linear maps, free evolution, marginals.
All operations are closed on (mean, covariance, log_weight) data.
"""

from .models import ModePairParams, TimePair
from .states import (
    GaussianDensity,
    GaussianState,
    coherent_wigner,
    evaluate_density,
    input_state,
    squeezed_vacuum_wigner,
    tensor,
)
from .transforms import (
    BEAMSPLITTER,
    beamsplitter_transform,
    epr_state,
    free_evolution,
    marginal,
    marginal_positions,
    position_marginal_at,
    pushforward,
    shear_matrix,
)

__all__ = [
    "ModePairParams",
    "TimePair",
    "GaussianDensity",
    "GaussianState",
    "coherent_wigner",
    "evaluate_density",
    "input_state",
    "squeezed_vacuum_wigner",
    "tensor",
    "BEAMSPLITTER",
    "beamsplitter_transform",
    "epr_state",
    "free_evolution",
    "marginal",
    "marginal_positions",
    "position_marginal_at",
    "pushforward",
    "shear_matrix",
]
