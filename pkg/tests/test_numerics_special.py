"""Unit tests for the error function."""

import math

import numpy as np
import pytest

from numerics import DomainError, erf


class TestErf:
    def test_known_values(self):
        assert erf(0.0) == 0.0
        assert erf(1.0) == pytest.approx(0.8427007929497149, abs=2e-15)

    def test_matches_math_erf(self):
        for x in np.linspace(-7.5, 7.5, 601):
            assert erf(float(x)) == pytest.approx(math.erf(float(x)), abs=1e-14)

    def test_both_branches_meet(self):
        below = erf(np.nextafter(2.5, 0.0))
        above = erf(2.5)
        assert abs(above - below) < 1e-14

    def test_odd(self):
        for x in (0.1, 0.9, 2.4, 2.6, 5.0):
            assert erf(-x) == -erf(x)

    def test_clamped_tails(self):
        assert erf(8.5) == 1.0
        assert erf(-20.0) == -1.0

    def test_monotone_on_grid(self):
        values = erf(np.linspace(-6.0, 6.0, 10_001))
        assert np.all(np.diff(values) >= 0.0)

    def test_array_shape_preserved(self):
        x = np.array([[0.0, 0.5], [1.0, -3.0]])
        out = erf(x)
        assert out.shape == (2, 2)
        assert out[1, 1] == pytest.approx(math.erf(-3.0), abs=1e-15)

    def test_scalar_returns_float(self):
        assert isinstance(erf(0.3), float)

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(DomainError, match="finite"):
            erf(bad)

    def test_non_finite_inside_array_rejected(self):
        with pytest.raises(DomainError):
            erf(np.array([0.0, np.nan]))
