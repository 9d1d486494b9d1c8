"""Scan the Monte Carlo S estimate over a tau grid and flag significant negatives."""

from __future__ import annotations

from dataclasses import dataclass

import pandas as pd

from phase_space import ModePairParams

from .estimators import McConfig, McEstimate, estimate_S

FLAG_SIGMAS = 4.0

VERDICT_VACUOUS = "vacuous"
VERDICT_PASS = "pass"
VERDICT_VIOLATION = "violation"


@dataclass(frozen=True)
class AuditRow:
    tau: float
    estimate: McEstimate
    flagged: bool


@dataclass(frozen=True)
class AuditReport:
    """Per-tau S estimates for one parameter set and the overall verdict."""

    params: ModePairParams
    rows: tuple[AuditRow, ...]

    @property
    def flag_count(self) -> int:
        return sum(1 for row in self.rows if row.flagged)

    @property
    def verdict(self) -> str:
        if not self.rows:
            return VERDICT_VACUOUS
        return VERDICT_VIOLATION if self.flag_count else VERDICT_PASS

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "tau": [r.tau for r in self.rows],
            "S_mc": [r.estimate.mean for r in self.rows],
            "S_mc_se": [r.estimate.std_error for r in self.rows],
            "mc_flag": [int(r.flagged) for r in self.rows],
        })


def lhv_audit(
    params: ModePairParams,
    tau_grid,
    mc: McConfig,
    flag_sigmas: float = FLAG_SIGMAS,
) -> AuditReport:
    """estimate_S at each tau; a row is flagged when S < -flag_sigmas * std_error."""
    rows = []
    for tau in tau_grid:
        estimate = estimate_S(params, float(tau), mc)
        flagged = estimate.mean < -flag_sigmas * estimate.std_error
        rows.append(AuditRow(float(tau), estimate, flagged))
    return AuditReport(params, tuple(rows))
