"""Counter-based random streams and Box-Muller Gaussian sampling."""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

_UINT64_LIMIT = 2**64


class RngStream:
    """
    Philox stream keyed by (seed, stream_id).

    The 128-bit Philox key is seed | stream_id << 64, so every
    (seed, stream_id) pair yields its own sequence, identical on every host
    and independent of how other streams are used. `position` counts the
    uniforms consumed so far. A stream is owned by one task at a time.
    """

    __slots__ = ("_seed", "_stream_id", "_position", "_generator")

    def __init__(self, seed: int, stream_id: int = 0) -> None:
        for name, value in (("seed", seed), ("stream_id", stream_id)):
            if not 0 <= int(value) < _UINT64_LIMIT:
                raise DomainError(f"{name} must be an unsigned 64-bit integer, got {value!r}")
        self._seed = int(seed)
        self._stream_id = int(stream_id)
        self._position = 0
        key = self._seed | (self._stream_id << 64)
        self._generator = np.random.Generator(np.random.Philox(key=key))

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def stream_id(self) -> int:
        return self._stream_id

    @property
    def position(self) -> int:
        return self._position

    def uniforms(self, n: int) -> np.ndarray:
        """n doubles in [0, 1)."""
        out = self._generator.random(n)
        self._position += n
        return out

    def standard_normals(self, n: int) -> np.ndarray:
        """n standard normal draws; uniforms are consumed in (radius, angle) pairs."""
        pairs = (n + 1) // 2
        u = self.uniforms(2 * pairs).reshape(pairs, 2)
        radius = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
        angle = 2.0 * math.pi * u[:, 1]
        z = np.empty((pairs, 2))
        z[:, 0] = radius * np.cos(angle)
        z[:, 1] = radius * np.sin(angle)
        return z.reshape(-1)[:n]

    def __repr__(self) -> str:
        return f"RngStream(seed={self._seed}, stream_id={self._stream_id}, position={self._position})"


def _check_std_dev(std_dev: float) -> None:
    if not math.isfinite(std_dev) or std_dev < 0:
        raise DomainError(f"std_dev must be finite and >= 0, got {std_dev!r}")


def gaussian_sample(stream: RngStream, mean: float, std_dev: float) -> float:
    """One draw from N(mean, std_dev^2). std_dev = 0 returns mean exactly."""
    _check_std_dev(std_dev)
    return mean + std_dev * float(stream.standard_normals(1)[0])


def gaussian_samples(stream: RngStream, mean: float, std_dev: float, n: int) -> np.ndarray:
    """n draws from N(mean, std_dev^2)."""
    _check_std_dev(std_dev)
    return mean + std_dev * stream.standard_normals(n)
