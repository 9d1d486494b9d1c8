"""Unit tests for the four-time sign inequality."""

import numpy as np
import pytest

from bell import ChainedTimes, DeltaLimitParams, F_closed, F_finite_s, Method, chained_closed, chained_finite_s
from phase_space import ModePairParams, TimePair

FIG1 = DeltaLimitParams(1.0, -1.0, 1.0)


class TestChainedTimes:
    def test_reflected(self):
        assert ChainedTimes.reflected(1.0) == ChainedTimes(3.0, -1.0, 3.0, -1.0)

    def test_terms(self):
        terms = ChainedTimes(1.0, 2.0, 3.0, 4.0).terms()
        assert terms == (
            (TimePair(1.0, 4.0), 1.0),
            (TimePair(2.0, 4.0), 1.0),
            (TimePair(2.0, 3.0), 1.0),
            (TimePair(1.0, 3.0), -1.0),
        )


class TestChainedClosed:
    def test_reflected_reduces_to_single_time_form(self):
        for tau in (0.25, 1.0, 2.0):
            expected = 2 * F_closed(tau, FIG1) + F_closed(-tau, FIG1) - F_closed(3 * tau, FIG1)
            assert chained_closed(ChainedTimes.reflected(tau), FIG1).value == pytest.approx(expected, rel=1e-13)

    def test_positive_where_S_is_negative(self):
        result = chained_closed(ChainedTimes.reflected(1.0), FIG1)
        assert result.value == pytest.approx(2.31, abs=0.02)
        assert result.method == Method.CLOSED_FORM
        assert not result.normalized

    def test_scales_with_K(self):
        times = ChainedTimes(0.5, -0.2, 1.5, 0.1)
        assert chained_closed(times, FIG1.with_K(0.1)).value == pytest.approx(
            0.1 * chained_closed(times, FIG1).value, rel=1e-13
        )


class TestChainedFiniteS:
    @pytest.mark.parametrize("s", [0.5, 0.1, 0.02])
    def test_nonnegative_on_reflected_grid(self, s):
        params = ModePairParams(1.0, -1.0, s)
        for tau in np.linspace(0.0, 3.0, 7):
            assert chained_finite_s(ChainedTimes.reflected(float(tau)), params).value >= -1e-9

    def test_zero_times(self):
        params = ModePairParams(1.0, -1.0, 0.5)
        result = chained_finite_s(ChainedTimes(0.0, 0.0, 0.0, 0.0), params)
        d = F_finite_s(TimePair(0.0, 0.0), params).value
        assert result.value == pytest.approx(2.0 * d, rel=1e-13)
        assert result.method == Method.QUADRATURE
