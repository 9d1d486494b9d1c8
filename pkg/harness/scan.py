"""ScanSpec: the tau grid, physical parameters and output target of one CLI run."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from bell import DeltaLimitParams
from lhv import McConfig
from phase_space import ModePairParams

# Grid points are rounded to this many decimals so tau = 1.00 prints as 1.
_TAU_DECIMALS = 12


@dataclass(frozen=True)
class ScanSpec:
    tau_min: float
    tau_max: float
    tau_step: float
    params: DeltaLimitParams | ModePairParams
    output_path: Path
    format: str = "both"
    s_values: tuple[float, ...] = field(default_factory=tuple)
    mc: McConfig | None = None

    def __post_init__(self) -> None:
        for name in ("tau_min", "tau_max", "tau_step"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.tau_step <= 0:
            raise ValueError(f"tau_step must be > 0, got {self.tau_step!r}")
        if self.tau_min > self.tau_max:
            raise ValueError(f"tau_min ({self.tau_min}) must not exceed tau_max ({self.tau_max})")
        if self.format not in ("csv", "svg", "both"):
            raise ValueError(f"unknown output format {self.format!r}")

    def tau_grid(self) -> np.ndarray:
        """tau_min, tau_min + step, ... up to tau_max inclusive (within rounding)."""
        count = int(math.floor((self.tau_max - self.tau_min) / self.tau_step + 1e-9)) + 1
        return np.round(self.tau_min + self.tau_step * np.arange(count), _TAU_DECIMALS)

    @property
    def wants_csv(self) -> bool:
        return self.format in ("csv", "both")

    @property
    def wants_svg(self) -> bool:
        return self.format in ("svg", "both")

    def path_with(self, suffix: str) -> Path:
        """output_path with `suffix` appended, e.g. run_s0.1 -> run_s0.1.csv."""
        return self.output_path.with_name(self.output_path.name + suffix)
