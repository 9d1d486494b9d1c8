"""
Bell functionals: delta-limit closed forms, normalized finite-s
probabilities, and the effective normalization that links the two.
"""

from .chained import ChainedTimes, chained_closed, chained_finite_s
from .closed_form import (
    DeltaLimitParams,
    F_by_quadrature,
    F_closed,
    S_closed,
    asymptotic_slope,
    unit_crossing_tau,
    w_closed,
)
from .finite_s import (
    AsymmetryScan,
    F_finite_s,
    S_finite_s,
    effective_K,
    opposite_sign_probability,
    time_asymmetry_scan,
)
from .results import Method, SignCorrelationResult

__all__ = [
    "ChainedTimes",
    "chained_closed",
    "chained_finite_s",
    "DeltaLimitParams",
    "F_by_quadrature",
    "F_closed",
    "S_closed",
    "asymptotic_slope",
    "unit_crossing_tau",
    "w_closed",
    "AsymmetryScan",
    "F_finite_s",
    "S_finite_s",
    "effective_K",
    "opposite_sign_probability",
    "time_asymmetry_scan",
    "Method",
    "SignCorrelationResult",
]
