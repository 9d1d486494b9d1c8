"""
Seeded Monte Carlo estimates of sign correlations.

Samples are split into chunks; chunk i draws from RngStream(seed, i) and
returns integer partial sums, which are folded in chunk order. Every
per-sample statistic here is integer valued, so the fold is exact and the
estimate does not depend on how chunks were scheduled.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from numerics import RngStream
from phase_space import ModePairParams, TimePair

from .sampler import sample_batch, trajectory_signs

# Rows drawn per sample_batch call inside a chunk.
BLOCK_SIZE = 1 << 17


@dataclass(frozen=True)
class McConfig:
    """Sample count, seed and chunking of a Monte Carlo run. max_workers only affects speed."""

    n_samples: int
    seed: int = 0
    n_chunks: int = 1
    max_workers: int = 1

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be >= 1, got {self.n_samples!r}")
        if self.n_chunks < 1:
            raise ValueError(f"n_chunks must be >= 1, got {self.n_chunks!r}")
        if self.max_workers < 1:
            raise ValueError(f"max_workers must be >= 1, got {self.max_workers!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")

    def chunk_sizes(self) -> list[int]:
        """Sample counts per chunk; the first n_samples % n_chunks chunks get one extra."""
        base, extra = divmod(self.n_samples, self.n_chunks)
        return [base + (1 if i < extra else 0) for i in range(self.n_chunks)]


@dataclass(frozen=True)
class McEstimate:
    """Sample mean, its standard error (sample standard deviation / sqrt(n)) and n."""

    mean: float
    std_error: float
    n: int

    @classmethod
    def from_sums(cls, total: int, total_sq: int, n: int) -> McEstimate:
        if n < 2:
            return cls(float(total) / n, 0.0, n)
        # n * sum(x^2) - (sum x)^2 is exact in integers.
        spread = n * total_sq - total * total
        variance = spread / (n * (n - 1))
        return cls(total / n, math.sqrt(max(variance, 0.0) / n), n)

    def sigmas_from(self, value: float) -> float:
        """(mean - value) in standard errors; inf when the error is zero and they differ."""
        diff = self.mean - value
        if self.std_error == 0.0:
            return 0.0 if diff == 0.0 else math.copysign(math.inf, diff)
        return diff / self.std_error


# Maps an (n, 4) batch to integer per-sample statistics.
Statistic = Callable[[np.ndarray], np.ndarray]


def _chunk_sums(params: ModePairParams, mc: McConfig, statistic: Statistic, index: int, size: int) -> tuple[int, int]:
    stream = RngStream(mc.seed, index)
    total = 0
    total_sq = 0
    remaining = size
    while remaining > 0:
        n = min(BLOCK_SIZE, remaining)
        x = statistic(sample_batch(params, stream, n)).astype(np.int64)
        total += int(x.sum())
        total_sq += int((x * x).sum())
        remaining -= n
    return total, total_sq


def run_statistic(params: ModePairParams, mc: McConfig, statistic: Statistic) -> McEstimate:
    """Mean of an integer statistic over mc.n_samples phase points."""
    jobs = [(i, size) for i, size in enumerate(mc.chunk_sizes()) if size > 0]
    work = lambda job: _chunk_sums(params, mc, statistic, *job)
    if mc.max_workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=mc.max_workers) as pool:
            partials = list(pool.map(work, jobs))
    else:
        partials = [work(job) for job in jobs]

    total = 0
    total_sq = 0
    for chunk_total, chunk_sq in partials:
        total += chunk_total
        total_sq += chunk_sq
    return McEstimate.from_sums(total, total_sq, mc.n_samples)


def _differ(batch: np.ndarray, t: TimePair) -> np.ndarray:
    return (trajectory_signs(batch, 1, t.t1) != trajectory_signs(batch, 2, t.t2)).astype(np.int64)


def estimate_D(params: ModePairParams, t: TimePair, mc: McConfig) -> McEstimate:
    """Fraction of trajectories whose positions at t1 and t2 have opposite signs."""
    return run_statistic(params, mc, lambda batch: _differ(batch, t))


def estimate_S(params: ModePairParams, tau: float, mc: McConfig) -> McEstimate:
    """
    3 D(tau, tau) - D(3 tau, 3 tau) with common random numbers: both terms are
    evaluated on the same phase points and the error comes from the
    per-sample difference.
    """
    near = TimePair.symmetric(tau)
    far = TimePair.symmetric(3.0 * tau)
    return run_statistic(params, mc, lambda batch: 3 * _differ(batch, near) - _differ(batch, far))


def estimate_chained(params: ModePairParams, times, mc: McConfig) -> McEstimate:
    """Four-time combination D(a,b') + D(a',b') + D(a',b) - D(a,b); nonnegative sample by sample."""
    terms = times.terms()

    def statistic(batch: np.ndarray) -> np.ndarray:
        out = np.zeros(batch.shape[0], dtype=np.int64)
        for pair, coef in terms:
            out += int(coef) * _differ(batch, pair)
        return out

    return run_statistic(params, mc, statistic)


def estimate_local_mean(params: ModePairParams, t: TimePair, particle: int, mc: McConfig) -> McEstimate:
    """Mean sign of one particle's position at its own time in t."""
    own_time = t.t1 if particle == 1 else t.t2
    return run_statistic(params, mc, lambda batch: trajectory_signs(batch, particle, own_time))
