"""Hurst estimation, pole elimination and fractional differencing."""

import numpy as np
import pytest

from xcausal.core import FrequencyGrid, RegularSeries
from xcausal.errors import (
    AlphaOutOfRangeError,
    ConfigError,
    TooFewFrequenciesError,
    TruncationTooLongError,
)
from xcausal.lrd import (
    WHITEN_ALPHA_CAP,
    estimate_hurst,
    flatness_slope,
    frac_diff_time,
    frac_diff_weights,
    pole_eliminate,
    whiten_alpha,
    whiten_pair,
)
from xcausal.spectral import FourierProjection, auto_spectrum, project
from xcausal.synth import simulate_fgn


def test_frac_diff_weights_half_order():
    w = frac_diff_weights(0.5, 4)
    np.testing.assert_allclose(
        w, [1.0, -0.5, -0.125, -0.0625, -0.0390625], atol=1e-15
    )


def test_frac_diff_weights_integer_orders():
    np.testing.assert_allclose(frac_diff_weights(1.0, 3), [1.0, -1.0, 0.0, 0.0],
                               atol=1e-15)
    np.testing.assert_allclose(frac_diff_weights(0.0, 3), [1.0, 0.0, 0.0, 0.0],
                               atol=1e-15)
    np.testing.assert_allclose(frac_diff_weights(2.0, 3), [1.0, -2.0, 1.0, 0.0],
                               atol=1e-15)


def test_frac_diff_weights_guards():
    with pytest.raises(AlphaOutOfRangeError):
        frac_diff_weights(-0.1, 4)
    with pytest.raises(AlphaOutOfRangeError):
        frac_diff_weights(2.5, 4)
    with pytest.raises(ConfigError):
        frac_diff_weights(0.5, -1)


def test_frac_diff_time_is_truncated_convolution():
    rng = np.random.default_rng(0)
    s = RegularSeries(0.0, 1.0, rng.standard_normal(32))
    out = frac_diff_time(s, 0.7, truncation=8)
    w = frac_diff_weights(0.7, 8)
    want = np.convolve(s.values, w)[:32]
    np.testing.assert_allclose(out.values, want, atol=1e-12)
    assert out.start == s.start and out.step == s.step
    # order one is the plain difference once past the one-step burn-in
    d1 = frac_diff_time(s, 1.0, truncation=4)
    np.testing.assert_allclose(d1.values[1:], np.diff(s.values), atol=1e-12)


def test_frac_diff_time_truncation_guard():
    s = RegularSeries(0.0, 1.0, np.zeros(10))
    with pytest.raises(TruncationTooLongError):
        frac_diff_time(s, 0.5, truncation=11)


def test_pole_eliminate_multiplier():
    grid = FrequencyGrid(0.5, 16)
    coeffs = np.ones(16, dtype=np.complex128)
    proj = FourierProjection(grid=grid, coeffs=coeffs, n_obs=1, label="s")
    out = pole_eliminate(proj, 1.0)
    # alpha = 1: multiply by i*f exactly
    np.testing.assert_allclose(out.coeffs, 1j * grid.frequencies(), atol=1e-12)
    with pytest.raises(AlphaOutOfRangeError):
        pole_eliminate(proj, 2.5)


def test_pole_eliminate_composes_additively():
    grid = FrequencyGrid(0.3, 12)
    rng = np.random.default_rng(1)
    coeffs = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    proj = FourierProjection(grid=grid, coeffs=coeffs, n_obs=5, label="s")
    two_steps = pole_eliminate(pole_eliminate(proj, 0.6), 0.9)
    one_step = pole_eliminate(proj, 1.5)
    np.testing.assert_allclose(two_steps.coeffs, one_step.coeffs, atol=1e-12)


def test_whiten_alpha_clamps():
    assert whiten_alpha(0.4) == pytest.approx(0.9)
    assert whiten_alpha(0.99) == pytest.approx(1.49)
    assert whiten_alpha(1.5) == WHITEN_ALPHA_CAP


def test_estimate_hurst_recovers_planted_exponent():
    # fBm paths observed on a regular grid: spectrum slope -(2H+1)
    for hurst in (0.3, 0.8):
        path = np.cumsum(simulate_fgn(hurst, 1 << 14, seed=7))
        series = RegularSeries(0.0, 1.0 / (1 << 14), path - path.mean(),
                               label="f")
        grid = FrequencyGrid.for_span(1.0, 600)
        est = estimate_hurst(auto_spectrum(project(series.to_irregular(), grid)))
        assert est.hurst == pytest.approx(hurst, abs=0.12)
        assert not est.clipped
        assert est.n_freqs_used == 60


def test_estimate_hurst_guards():
    path = np.cumsum(simulate_fgn(0.5, 4096, seed=8))
    series = RegularSeries(0.0, 1.0 / 4096, path - path.mean(), label="f")
    grid = FrequencyGrid.for_span(1.0, 40)
    auto = auto_spectrum(project(series.to_irregular(), grid))
    with pytest.raises(TooFewFrequenciesError):
        estimate_hurst(auto, low_fraction=0.1)  # 4 of 40 frequencies
    with pytest.raises(ConfigError):
        estimate_hurst(auto, low_fraction=0.9)


def test_flatness_improves_after_whitening():
    path = np.cumsum(simulate_fgn(0.8, 1 << 14, seed=9))
    series = RegularSeries(0.0, 1.0 / (1 << 14), path - path.mean(), label="f")
    grid = FrequencyGrid.for_span(1.0, 600)
    proj = project(series.to_irregular(), grid)
    est = estimate_hurst(auto_spectrum(proj))
    raw_slope = abs(est.slope)
    white, _ = whiten_pair(proj, proj, est.hurst, est.hurst)
    assert abs(flatness_slope(white)) < raw_slope
    assert abs(flatness_slope(white)) < 0.5
