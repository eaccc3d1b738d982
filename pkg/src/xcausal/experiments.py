"""Monte Carlo experiment harnesses behind the study subcommands.

Each harness is a pure function of its parameters and a seed; trial t of
a run uses the derived seed (seed xor t), so any single trial can be
reproduced in isolation. They return raw per-trial results; summarizing
(percentile bands, medians, success counts) happens in the caller so
tests can look at whichever statistic they need.
"""

import numpy as np

from .causal import llr
from .core import LagGrid, RegularSeries
from .errors import ConfigError
from .baselines import hy_lagged_correlogram
from .pipeline import fourier_correlogram, joint_grid
from .synth import (
    CausalKernel,
    correlated_pair,
    kernel_pair,
    lagged_pair,
    sample_irregular,
    trial_seed,
)


def _split_pair_seeds(seed, trial):
    root = np.random.SeedSequence(trial_seed(seed, trial))
    return root.spawn(3)


def _sampled_pair(hurst, rho, tau, n_fine, step, n1, n2, seed, trial):
    s_path, s_x, s_y = _split_pair_seeds(seed, trial)
    pair = lagged_pair(hurst=hurst, rho=rho, tau=tau, n=n_fine, step=step,
                       seed=s_path)
    x_obs = sample_irregular(pair.x, n1, s_x, label="x")
    y_obs = sample_irregular(pair.y, n2, s_y, label="y")
    return x_obs, y_obs


def lrd_band_experiment(trials=100, hurst=0.4, n1=9998, n2=6000,
                        projections=400, fine_exponent=17, span=1.0,
                        half_count=10, delta_h=None, erase=True,
                        smooth_half_width=0, seed=20):
    """Correlograms of independent long-memory pairs, with/without erasure.

    The pairs share nothing, so every nonzero correlation is spurious;
    the spread of these correlograms across trials is what pole
    elimination is supposed to collapse.
    """
    n_fine = 1 << fine_exponent
    step = span / n_fine
    if delta_h is None:
        delta_h = span / projections
    lag_grid = LagGrid(delta_h, half_count)

    out = []
    for t in range(trials):
        x_obs, y_obs = _sampled_pair(hurst, 0.0, 0.0, n_fine, step,
                                     n1, n2, seed, t)
        grid = joint_grid(x_obs, y_obs, projections)
        result = fourier_correlogram(x_obs, y_obs, grid, lag_grid,
                                     erase_lrd=erase,
                                     smooth_half_width=smooth_half_width)
        out.append(result.correlogram)
    return out


def hy_contrast_experiment(trials=100, hurst=0.8, rho=0.95, n_obs=2500,
                           projections=5000, fine_exponent=16, span=1.0,
                           delta_h=None, half_count=7, seed=30):
    """Lagged Hayashi-Yoshida vs whitened frequency method, same data.

    The pair is simultaneously correlated fractional noise: its raw
    increments genuinely correlate far across time (long memory), which
    HY reports faithfully lag after lag, while the whitened pipeline
    reads the innovations, which correlate only at lag zero. Returns
    (hy_correlograms, fourier_correlograms).
    """
    n_fine = 1 << fine_exponent
    step = span / n_fine
    if delta_h is None:
        delta_h = span / n_obs / 3.0
    lag_grid = LagGrid(delta_h, half_count)

    hy_out = []
    fourier_out = []
    for t in range(trials):
        x_obs, y_obs = _sampled_pair(hurst, rho, 0.0, n_fine, step,
                                     n_obs, n_obs, seed, t)
        hy_out.append(hy_lagged_correlogram(x_obs, y_obs, lag_grid))
        grid = joint_grid(x_obs, y_obs, projections)
        result = fourier_correlogram(x_obs, y_obs, grid, lag_grid,
                                     erase_lrd=True)
        fourier_out.append(result.correlogram)
    return hy_out, fourier_out


def offcenter_median(correlograms, exclude_within):
    """Median |rho| over all trials and lags with |h| > exclude_within."""
    grid = correlograms[0].lag_grid
    mask = np.abs(grid.lags()) > exclude_within
    if not np.any(mask):
        raise ConfigError("no lags beyond the exclusion window")
    stack = np.stack([c.rho for c in correlograms])
    return float(np.median(np.abs(stack[:, mask])))


def lag_recovery_experiment(trials=100, tau=0.013, beta=200.0, alpha=None,
                            noise_scale=1.0, fine_exponent=18, span=16.384,
                            n_draws=60_000, projections=3000, delta_h=0.001,
                            half_count=30, seed=40):
    """Recover a known causal delay from kernel-driven pairs.

    The observables are the increment series of a Brownian driver and
    of a response whose increments are noise plus an exponential causal
    average of the driver's increments delayed by tau. The observables
    are already stationary, so the plain pipeline applies (no pole to
    eliminate). alpha defaults to a coupling strong enough to dominate
    the response noise (alpha/beta = 2.065 * noise_scale). Returns the
    per-trial LlrResult list; delay should cluster near tau and
    direction at X_causes_Y.
    """
    if alpha is None:
        alpha = 2.065 * beta * noise_scale
    kernel = CausalKernel(tau=tau, alpha=alpha, beta=beta)
    n_fine = 1 << fine_exponent
    step = span / n_fine
    lag_grid = LagGrid(delta_h, half_count)

    out = []
    for t in range(trials):
        root = np.random.SeedSequence(trial_seed(seed, t))
        s_pair, s_x, s_y = root.spawn(3)
        pair = kernel_pair(kernel, n_fine, step, s_pair,
                           noise_scale=noise_scale)
        x_obs = sample_irregular(pair.x, n_draws, s_x, label="x")
        y_obs = sample_irregular(pair.y, n_draws, s_y, label="y")
        grid = joint_grid(x_obs, y_obs, projections)
        result = fourier_correlogram(x_obs, y_obs, grid, lag_grid)
        out.append(llr(result.correlogram))
    return out


def _stationary_obs(hurst, rho, n_fine, step, n1, n2, seed, trial):
    """Sample a correlated stationary (non-cumulated) pair irregularly."""
    s_path, s_x, s_y = _split_pair_seeds(seed, trial)
    a, b = correlated_pair(hurst, rho, n_fine, s_path)
    x = RegularSeries(0.0, step, a, label="x")
    y = RegularSeries(0.0, step, b, label="y")
    return (sample_irregular(x, n1, s_x, label="x"),
            sample_irregular(y, n2, s_y, label="y"))


def variance_study(projections_list=(10, 100, 1000), trials=40,
                   n_obs=10_000, fine_exponent=17, span=1.0,
                   delta_h=None, half_count=5, seed=50):
    """Per-lag std of rho across trials, for each projection count.

    Independent white stationary pairs, so rho fluctuates around zero
    and its spread is pure estimator noise; the correlogram averages
    one noisy cross-spectrum cell per frequency, so the std should
    fall like 1/sqrt(P). Returns (lag_grid, {P: std array over lags}).
    """
    n_fine = 1 << fine_exponent
    step = span / n_fine
    if delta_h is None:
        delta_h = span / 1000.0
    lag_grid = LagGrid(delta_h, half_count)

    stds = {}
    for projections in projections_list:
        rhos = np.empty((trials, len(lag_grid)))
        for t in range(trials):
            x_obs, y_obs = _stationary_obs(0.5, 0.0, n_fine, step,
                                           n_obs, n_obs, seed, t)
            grid = joint_grid(x_obs, y_obs, projections)
            result = fourier_correlogram(x_obs, y_obs, grid, lag_grid)
            rhos[t] = result.correlogram.rho
        stds[int(projections)] = np.std(rhos, axis=0, ddof=1)
    return lag_grid, stds
