"""End-to-end frequency pipeline: wiring, guards, and diagnostics."""

import numpy as np
import pytest

from xcausal.core import (
    FrequencyGrid,
    IrregularSeries,
    LagGrid,
    RegularSeries,
    demean,
)
from xcausal.errors import ConfigError
from xcausal.pipeline import (
    PipelineResult,
    aliasing_warning_needed,
    fourier_correlogram,
    joint_grid,
)
from xcausal.spectral import project
from xcausal.synth import sample_irregular, simulate_fgn


def _series(seed, n=300, span=4.0, label="s"):
    rng = np.random.default_rng(seed)
    t = np.sort(rng.uniform(0.0, span, n))
    return IrregularSeries(t, rng.standard_normal(n), label=label)


def test_joint_grid_spans_union_of_supports():
    x = IrregularSeries([0.0, 5.0], [1.0, -1.0], label="x")
    y = IrregularSeries([1.0, 7.0], [1.0, -1.0], label="y")
    grid = joint_grid(x, y, 40)
    assert grid.count == 40
    assert grid.delta_f == pytest.approx(2.0 * np.pi / 7.0)


def test_erase_and_alphas_are_mutually_exclusive():
    x = _series(0, label="x")
    y = _series(1, label="y")
    grid = joint_grid(x, y, 50)
    lag_grid = LagGrid(0.05, 5)
    with pytest.raises(ConfigError):
        fourier_correlogram(x, y, grid, lag_grid,
                            erase_lrd=True, alphas=(0.5, 0.5))


def test_self_correlation_peaks_at_one():
    x = _series(2, label="x")
    grid = joint_grid(x, x, 300)
    lag_grid = LagGrid(0.02, 4)
    result = fourier_correlogram(x, x, grid, lag_grid)
    assert isinstance(result, PipelineResult)
    rho = result.correlogram.rho
    center = lag_grid.half_count
    assert rho[center] == pytest.approx(1.0, abs=1e-9)
    assert np.all(rho[center] >= rho - 1e-12)
    assert result.hurst_x is None and result.flatness_y is None


def test_projector_seam_replaces_default_projection():
    x = _series(3, label="x")
    y = _series(4, label="y")
    grid = joint_grid(x, y, 80)
    lag_grid = LagGrid(0.05, 3)
    calls = []

    def recording(series, g):
        calls.append(series.label)
        return project(demean(series), g)

    seamed = fourier_correlogram(x, y, grid, lag_grid, projector=recording)
    plain = fourier_correlogram(x, y, grid, lag_grid)
    assert calls == ["x", "y"]
    np.testing.assert_array_equal(seamed.correlogram.rho, plain.correlogram.rho)


def test_erase_lrd_fills_diagnostics():
    rng_paths = [simulate_fgn(0.8, 1 << 12, seed=s) for s in (10, 11)]
    step = 1.0 / (1 << 12)
    series = []
    for i, fgn in enumerate(rng_paths):
        path = RegularSeries(0.0, step, np.cumsum(fgn), label=f"s{i}")
        series.append(sample_irregular(path, 500, seed=20 + i))
    x, y = series
    grid = joint_grid(x, y, 200)
    lag_grid = LagGrid(0.01, 4)
    plain = fourier_correlogram(x, y, grid, lag_grid)
    erased = fourier_correlogram(x, y, grid, lag_grid, erase_lrd=True)
    assert plain.hurst_x is None
    assert 0.01 <= erased.hurst_x.hurst <= 0.99
    assert 0.01 <= erased.hurst_y.hurst <= 0.99
    # Whitening should leave a roughly flat spectrum (docs warn above 0.3).
    assert abs(erased.flatness_x) < 0.3
    assert abs(erased.flatness_y) < 0.3
    assert not np.array_equal(plain.correlogram.rho, erased.correlogram.rho)


def test_manual_alphas_change_the_answer():
    x = _series(5, label="x")
    y = _series(6, label="y")
    grid = joint_grid(x, y, 100)
    lag_grid = LagGrid(0.05, 3)
    plain = fourier_correlogram(x, y, grid, lag_grid)
    tilted = fourier_correlogram(x, y, grid, lag_grid, alphas=(0.4, 0.4))
    assert not np.array_equal(plain.correlogram.rho, tilted.correlogram.rho)


def test_smoothing_plumbs_through():
    x = _series(7, label="x")
    y = _series(8, label="y")
    grid = joint_grid(x, y, 100)
    lag_grid = LagGrid(0.05, 3)
    raw = fourier_correlogram(x, y, grid, lag_grid)
    smoothed = fourier_correlogram(x, y, grid, lag_grid, smooth_half_width=5)
    assert not np.array_equal(raw.correlogram.rho, smoothed.correlogram.rho)


def test_aliasing_warning_threshold():
    x = RegularSeries(0.0, 1.0, np.arange(20.0), label="x").to_irregular()
    y = RegularSeries(0.0, 1.0, np.arange(20.0) * 2, label="y").to_irregular()
    assert aliasing_warning_needed(x, y, LagGrid(0.4, 3))
    assert not aliasing_warning_needed(x, y, LagGrid(0.6, 3))
