"""Unit tests for normalized finite-s sign correlations."""

import math

import numpy as np
import pytest

from bell import (
    DeltaLimitParams,
    F_closed,
    F_finite_s,
    Method,
    S_finite_s,
    SignCorrelationResult,
    effective_K,
    opposite_sign_probability,
    time_asymmetry_scan,
)
from numerics import ShapeError, integrate_1d
from phase_space import GaussianDensity, ModePairParams, TimePair


def _centred_F(s, tau):
    """Opposite-sign probability of the centred state: arccos(rho)/pi."""
    a = 0.5 / (s * s) + 0.5 * tau * tau * s * s
    b = 0.5 * (1.0 + tau * tau)
    return math.acos((a - b) / (a + b)) / math.pi


def _symmetric_time_F(params, tau):
    """
    At equal times q1, q2 are (A + B)/sqrt2 and (B - A)/sqrt2 with independent
    A ~ N(q0 + p0 tau, (1 + tau^2)/2) and B ~ N(0, a); signs differ iff |B| < |A|.
    """
    s = params.s
    a = 0.5 / (s * s) + 0.5 * tau * tau * s * s
    mean = params.q0 + params.p0 * tau
    sd = math.sqrt(0.5 * (1.0 + tau * tau))

    def integrand(x):
        x = np.atleast_1d(x)
        pdf = np.exp(-0.5 * ((x - mean) / sd) ** 2) / (sd * math.sqrt(2.0 * math.pi))
        return pdf * np.array([math.erf(abs(v) / math.sqrt(2.0 * a)) for v in x])

    # split at A = 0 where |A| has a kink
    lo, hi = mean - 12 * sd, mean + 12 * sd
    if lo < 0.0 < hi:
        return integrate_1d(integrand, lo, 0.0).value + integrate_1d(integrand, 0.0, hi).value
    return integrate_1d(integrand, lo, hi).value


class TestSignCorrelationResult:
    def test_normalized_bounds(self):
        with pytest.raises(ValueError, match="outside"):
            SignCorrelationResult(1.5, Method.QUADRATURE, 0.0, normalized=True)
        SignCorrelationResult(1.5, Method.CLOSED_FORM, 0.0, normalized=False)

    def test_negative_error_rejected(self):
        with pytest.raises(ValueError):
            SignCorrelationResult(0.5, Method.QUADRATURE, -1.0, normalized=True)

    def test_combine(self):
        a = SignCorrelationResult(0.4, Method.QUADRATURE, 1e-12, normalized=True)
        b = SignCorrelationResult(0.9, Method.QUADRATURE, 2e-12, normalized=True)
        c = a.combine(b, 3.0, -1.0)
        assert c.value == pytest.approx(0.3)
        assert c.error_estimate == pytest.approx(5e-12)
        assert not c.normalized


class TestOppositeSignProbability:
    def test_independent_centred(self):
        result = opposite_sign_probability(GaussianDensity([0.0, 0.0], np.eye(2)))
        assert result.value == pytest.approx(0.5, abs=1e-12)
        assert result.normalized
        assert result.method == Method.QUADRATURE

    @pytest.mark.parametrize("rho", [-0.9, -0.3, 0.5, 0.99])
    def test_correlated_centred(self, rho):
        result = opposite_sign_probability(GaussianDensity([0.0, 0.0], [[1.0, rho], [rho, 1.0]]))
        assert result.value == pytest.approx(math.acos(rho) / math.pi, abs=1e-11)

    def test_anticorrelation_favours_opposite_signs(self):
        result = opposite_sign_probability(GaussianDensity([0.0, 0.0], [[1.0, -0.9], [-0.9, 1.0]]))
        assert result.value > 0.5
        assert result.value == pytest.approx(0.8564, abs=1e-4)

    def test_shifted_independent(self):
        density = GaussianDensity([1.0, -0.5], np.diag([1.0, 4.0]))
        p1 = 0.5 * (1.0 + math.erf(1.0 / math.sqrt(2.0)))
        p2 = 0.5 * (1.0 + math.erf(-0.5 / (2.0 * math.sqrt(2.0))))
        expected = p1 * (1.0 - p2) + (1.0 - p1) * p2
        assert opposite_sign_probability(density).value == pytest.approx(expected, abs=1e-11)

    def test_far_from_origin(self):
        density = GaussianDensity([20.0, 20.0], np.eye(2))
        assert opposite_sign_probability(density).value == pytest.approx(0.0, abs=1e-12)

    def test_weight_scales_result(self):
        density = GaussianDensity([0.0, 0.0], np.eye(2), log_weight=math.log(0.2))
        result = opposite_sign_probability(density)
        assert result.value == pytest.approx(0.1, abs=1e-12)
        assert not result.normalized

    def test_requires_2d(self):
        with pytest.raises(ShapeError):
            opposite_sign_probability(GaussianDensity([0.0], [[1.0]]))


class TestFFiniteS:
    def test_centred_unsqueezed_at_zero(self):
        result = F_finite_s(TimePair(0.0, 0.0), ModePairParams(0.0, 0.0, 1.0))
        assert result.value == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("s, tau", [(0.5, 0.7), (0.1, 0.0), (0.1, 3.0), (2.0, 1.0)])
    def test_centred_closed_form(self, s, tau):
        result = F_finite_s(TimePair.symmetric(tau), ModePairParams(0.0, 0.0, s))
        assert result.value == pytest.approx(_centred_F(s, tau), abs=1e-10)

    @pytest.mark.parametrize("s, tau", [(0.5, 1.0), (0.1, 0.5), (0.02, 1.0), (0.1, 3.0)])
    def test_general_symmetric_times(self, s, tau):
        params = ModePairParams(1.0, -1.0, s)
        result = F_finite_s(TimePair.symmetric(tau), params)
        assert result.value == pytest.approx(_symmetric_time_F(params, tau), abs=1e-9)

    @pytest.mark.parametrize("s", [1.0, 0.1, 0.02])
    def test_probabilities_in_unit_interval(self, s):
        params = ModePairParams(1.0, -1.0, s)
        for t in (TimePair(0.0, 0.0), TimePair(10.0, 0.0), TimePair(-3.0, 7.5), TimePair(10.0, 10.0)):
            result = F_finite_s(t, params)
            assert result.normalized
            assert 0.0 <= result.value <= 1.0

    def test_converges_to_delta_limit(self):
        delta = DeltaLimitParams(1.0, -1.0, 1.0)
        taus = np.linspace(0.0, 2.0, 9)

        def worst(s):
            params = ModePairParams(1.0, -1.0, s)
            return max(
                abs(math.sqrt(math.pi) / s * F_finite_s(TimePair.symmetric(float(t)), params).value
                    / F_closed(float(t), delta) - 1.0)
                for t in taus
            )

        coarse, fine = worst(0.1), worst(0.02)
        assert fine < coarse
        assert fine < 0.02


class TestSFiniteS:
    def test_zero_tau(self):
        params = ModePairParams(1.0, -1.0, 0.5)
        s0 = S_finite_s(0.0, params)
        f0 = F_finite_s(TimePair(0.0, 0.0), params)
        assert s0.value == pytest.approx(2.0 * f0.value, abs=1e-14)
        assert not s0.normalized

    def test_centred_state_nonnegative(self):
        params = ModePairParams(0.0, 0.0, 0.5)
        for tau in np.linspace(0.0, 10.0, 21):
            assert S_finite_s(float(tau), params).value >= -1e-12

    def test_symmetric_combination_can_be_negative_for_local_state(self):
        # the normalized state is a local model, yet 3F(tau) - F(3 tau) < 0 here
        value = S_finite_s(1.0, ModePairParams(1.0, -1.0, 0.02)).value
        assert value < -1e-6
        k = 0.02 / math.sqrt(math.pi)
        assert value == pytest.approx(-0.12 * k, rel=0.2)


class TestEffectiveK:
    def test_small_s_close_to_delta_constant(self):
        s = 0.02
        assert effective_K(0.5, ModePairParams(1.0, -1.0, s)) == pytest.approx(s / math.sqrt(math.pi), rel=0.01)

    def test_depends_on_time(self):
        params = ModePairParams(1.0, -1.0, 0.1)
        k0 = effective_K(0.0, params)
        k10 = effective_K(10.0, params)
        assert abs(k10 - k0) / k0 > 0.1

    def test_reuses_precomputed_value(self):
        params = ModePairParams(1.0, -1.0, 0.1)
        f = F_finite_s(TimePair.symmetric(2.0), params)
        assert effective_K(2.0, params, f_finite=f) == effective_K(2.0, params)


class TestTimeAsymmetryScan:
    def test_zero_delta_is_reference(self):
        scan = time_asymmetry_scan(1.0, [0.0], ModePairParams(1.0, -1.0, 0.5))
        assert scan.deviations == (0.0,)
        assert scan.max_deviation == 0.0

    def test_finite_s_depends_on_more_than_tau(self):
        scan = time_asymmetry_scan(1.0, [-0.5, 0.0, 0.5], ModePairParams(1.0, -1.0, 0.5))
        assert scan.max_deviation > 1e-6

    def test_deviation_vanishes_as_squeezing_sharpens(self):
        deviations = [
            time_asymmetry_scan(1.0, [-1.0, 0.0, 1.0], ModePairParams(1.0, -1.0, s)).max_deviation
            for s in (0.5, 0.1, 0.02)
        ]
        assert deviations[0] > deviations[1] > deviations[2]
        assert deviations[0] > 1e-2
        assert deviations[2] < 1e-4

    def test_frame(self):
        scan = time_asymmetry_scan(1.0, [0.0, 0.25], ModePairParams(1.0, -1.0, 0.5))
        frame = scan.to_frame()
        assert list(frame.columns) == ["delta", "t1", "t2", "F", "deviation"]
        assert frame["t1"].tolist() == [1.0, 1.25]
        assert frame["t2"].tolist() == [1.0, 0.75]
