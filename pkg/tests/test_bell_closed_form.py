"""Unit tests for the delta-limit closed forms."""

import math

import numpy as np
import pytest

from bell import (
    DeltaLimitParams,
    F_by_quadrature,
    F_closed,
    S_closed,
    asymptotic_slope,
    unit_crossing_tau,
    w_closed,
)
from numerics import DomainError, integrate_1d

FIG1 = DeltaLimitParams(1.0, -1.0, 1.0)


class TestDeltaLimitParams:
    def test_defaults(self):
        assert DeltaLimitParams(0.0, 0.0).K == 1.0

    @pytest.mark.parametrize("K", [0.0, -1.0, float("inf")])
    def test_bad_K_rejected(self, K):
        with pytest.raises(DomainError):
            DeltaLimitParams(0.0, 0.0, K)

    def test_centre_moves_with_tau(self):
        assert FIG1.q0_at(2.0) == -1.0

    def test_with_K(self):
        assert FIG1.with_K(3.0) == DeltaLimitParams(1.0, -1.0, 3.0)


class TestWClosed:
    def test_mass_is_K(self):
        params = DeltaLimitParams(0.5, 0.2, 2.5)
        tau = 1.7
        total = integrate_1d(lambda q: w_closed(q, tau, params), -30.0, 30.0).value
        assert total == pytest.approx(2.5, rel=1e-10)

    def test_peak_at_moving_centre(self):
        q = np.linspace(-5, 5, 1001)
        values = w_closed(q, 0.0, FIG1)
        assert q[np.argmax(values)] == pytest.approx(1.0)


class TestFClosed:
    def test_fig1_at_zero(self):
        expected = 2.0 / math.sqrt(math.pi) * math.exp(-1.0) + 2.0 * math.erf(1.0)
        assert F_closed(0.0, FIG1) == pytest.approx(expected, rel=1e-14)
        assert F_closed(0.0, FIG1) == pytest.approx(2.100509, abs=1e-6)

    def test_fig1_at_one(self):
        # centre is at zero, only the exponential term survives
        assert F_closed(1.0, FIG1) == pytest.approx(2.0 * math.sqrt(2.0) / math.sqrt(math.pi), rel=1e-14)

    def test_linear_in_K(self):
        for tau in (0.0, 0.6, 2.5):
            assert F_closed(tau, FIG1.with_K(0.25)) == pytest.approx(0.25 * F_closed(tau, FIG1), rel=1e-14)

    def test_nonnegative(self):
        for q0 in (-3.0, 0.0, 2.0):
            for p0 in (-2.0, 0.5):
                for tau in np.linspace(0.0, 10.0, 21):
                    assert F_closed(float(tau), DeltaLimitParams(q0, p0)) >= 0.0

    @pytest.mark.parametrize("q0, p0, tau", [(1.0, -1.0, 0.0), (1.0, -1.0, 1.0), (-2.5, 0.3, 4.2), (0.0, 3.0, 2.0)])
    def test_matches_quadrature(self, q0, p0, tau):
        params = DeltaLimitParams(q0, p0, 1.3)
        assert F_closed(tau, params) == pytest.approx(F_by_quadrature(tau, params).value, rel=1e-8)


class TestSClosed:
    def test_fig1_at_zero(self):
        assert S_closed(0.0, FIG1) == pytest.approx(2.0 * F_closed(0.0, FIG1), rel=1e-14)

    def test_fig1_goes_negative(self):
        assert S_closed(1.0, FIG1) == pytest.approx(-0.12, abs=0.01)
        grid = np.arange(0, 501) * 0.01
        assert min(S_closed(float(t), FIG1) for t in grid) < 0.0

    def test_symmetric_state_stays_nonnegative(self):
        centred = DeltaLimitParams(0.0, 0.0)
        for tau in np.linspace(0.0, 20.0, 401):
            assert S_closed(float(tau), centred) >= -1e-12


class TestGrowth:
    def test_unit_crossing_at_zero_for_fig1(self):
        assert unit_crossing_tau(FIG1) == 0.0

    def test_unit_crossing_found_by_bisection(self):
        params = DeltaLimitParams(0.0, 0.0, 0.5)
        tau = unit_crossing_tau(params)
        assert tau is not None
        assert F_closed(tau, params) == pytest.approx(1.0, abs=1e-9)

    def test_no_crossing_for_tiny_K(self):
        assert unit_crossing_tau(DeltaLimitParams(0.0, 0.0, 1e-4), tau_max=10.0) is None

    def test_asymptotic_slope(self):
        slope = asymptotic_slope(FIG1)
        expected = 2.0 * math.erf(1.0) + 2.0 / math.sqrt(math.pi) * math.exp(-1.0)
        assert slope == pytest.approx(expected, rel=1e-14)
        tau = 1e4
        assert F_closed(tau, FIG1) / tau == pytest.approx(slope, rel=1e-3)
