"""
Local hidden-variable reading of the finite-s state: sample phase points,
follow free trajectories, count sign coincidences.
"""

from .audit import AuditReport, AuditRow, lhv_audit
from .estimators import (
    McConfig,
    McEstimate,
    estimate_chained,
    estimate_D,
    estimate_local_mean,
    estimate_S,
    run_statistic,
)
from .sampler import PhasePoint, sample_batch, sample_initial, trajectory_sign, trajectory_signs

__all__ = [
    "AuditReport",
    "AuditRow",
    "lhv_audit",
    "McConfig",
    "McEstimate",
    "estimate_chained",
    "estimate_D",
    "estimate_local_mean",
    "estimate_S",
    "run_statistic",
    "PhasePoint",
    "sample_batch",
    "sample_initial",
    "trajectory_sign",
    "trajectory_signs",
]
