"""Synthetic generators: fractional noise, causal kernels, sampling."""

import numpy as np
import pytest

from xcausal.baselines import regular_xcov
from xcausal.core import RegularSeries
from xcausal.errors import ConfigError
from xcausal.synth import (
    CausalKernel,
    add_observation_noise,
    brownian_increments,
    correlated_pair,
    fgn_autocovariance,
    kernel_drive,
    kernel_pair,
    lagged_pair,
    sample_irregular,
    simulate_fgn,
    trial_seed,
)


def test_trial_seed_is_xor():
    assert trial_seed(40, 0) == 40
    assert trial_seed(40, 3) == 40 ^ 3
    seeds = {trial_seed(12, t) for t in range(100)}
    assert len(seeds) == 100


def test_fgn_autocovariance_values():
    # gamma(k) = (|k+1|^2H - 2|k|^2H + |k-1|^2H) / 2
    g = fgn_autocovariance(0.8, 3)
    assert g[0] == pytest.approx(1.0)
    assert g[1] == pytest.approx((2.0 ** 1.6 - 2.0) / 2.0)
    assert g[2] == pytest.approx((3.0 ** 1.6 - 2.0 * 2.0 ** 1.6 + 1.0) / 2.0)
    # H = 1/2 has independent increments
    np.testing.assert_allclose(fgn_autocovariance(0.5, 4), [1.0, 0, 0, 0],
                               atol=1e-12)


def test_simulate_fgn_matches_target_autocovariance():
    n = 1 << 15
    for hurst in (0.3, 0.7):
        x = simulate_fgn(hurst, n, seed=5)
        assert x.shape == (n,)
        assert np.std(x) == pytest.approx(1.0, abs=0.05)
        want = fgn_autocovariance(hurst, 3)
        for k in (1, 2):
            got = np.mean(x[:-k] * x[k:])
            assert got == pytest.approx(want[k], abs=0.05)


def test_simulate_fgn_determinism():
    a = simulate_fgn(0.7, 256, seed=9)
    b = simulate_fgn(0.7, 256, seed=9)
    np.testing.assert_array_equal(a, b)
    c = simulate_fgn(0.7, 256, seed=10)
    assert not np.array_equal(a, c)


def test_correlated_pair_hits_target_rho():
    a, b = correlated_pair(0.5, 0.6, 1 << 15, seed=3)
    got = np.corrcoef(a, b)[0, 1]
    assert got == pytest.approx(0.6, abs=0.03)
    a, b = correlated_pair(0.5, 0.0, 1 << 15, seed=4)
    assert abs(np.corrcoef(a, b)[0, 1]) < 0.03
    with pytest.raises(ConfigError):
        correlated_pair(0.5, 1.5, 128, seed=0)


def test_causal_kernel_values_and_weights():
    k = CausalKernel(tau=2.0, alpha=3.0, beta=1.0)
    assert k.value(1.9) == 0.0  # nothing before the delay
    assert k.value(2.0) == pytest.approx(3.0)
    assert k.value(3.0) == pytest.approx(3.0 * np.exp(-1.0))
    w = k.weights(step=1.0, max_len=100)
    assert w[0] == 0.0 and w[1] == 0.0
    assert w[2] == pytest.approx(3.0)
    assert w.shape[0] <= 100
    with pytest.raises(ConfigError):
        CausalKernel(tau=-1.0, alpha=1.0, beta=1.0)
    with pytest.raises(ConfigError):
        k.weights(step=0.0, max_len=10)


def test_kernel_drive_is_causal():
    # an impulse in dx cannot influence dy before tau
    kernel = CausalKernel(tau=3.0, alpha=1.0, beta=0.5)
    dx = np.zeros(32)
    dx[10] = 1.0
    dy = kernel_drive(dx, kernel, step=1.0, noise_seed=0, noise_scale=0.0)
    assert np.all(dy[:13] == 0.0)
    assert dy[13] == pytest.approx(1.0)  # alpha * exp(0) * step
    assert dy[14] == pytest.approx(np.exp(-0.5))


def test_kernel_pair_ground_truth():
    kernel = CausalKernel(tau=4.0, alpha=2.0, beta=1.0)
    pair = kernel_pair(kernel, n=20_000, step=1.0, seed=6, noise_scale=0.1)
    assert pair.tau == 4.0
    # increments stationary by construction: the lagged product correlogram
    # of the stored series peaks at the kernel delay
    corr = regular_xcov(pair.x, pair.y, 8)
    assert corr.lags()[np.argmax(corr.rho)] == pytest.approx(4.0)


def test_lagged_pair_snaps_tau_and_leads():
    pair = lagged_pair(hurst=0.5, rho=0.9, tau=0.25, n=10_000, step=0.1,
                       seed=7)
    assert pair.tau == pytest.approx(0.2)  # snapped to 2 whole steps
    dx = np.diff(pair.x.values)
    dy = np.diff(pair.y.values)
    # x increments today match y increments two steps later at rho
    got = np.corrcoef(dx[:-2], dy[2:])[0, 1]
    assert got == pytest.approx(0.9, abs=0.03)


def test_brownian_increments_variance():
    d = brownian_increments(1 << 14, step=0.25, seed=8)
    assert np.var(d) == pytest.approx(0.25, rel=0.05)


def test_sample_irregular_reads_the_path():
    rng_values = np.arange(1000, dtype=np.float64) ** 1.5
    path = RegularSeries(2.0, 0.5, rng_values, label="p")
    obs = sample_irregular(path, 200, seed=11, label="o")
    assert obs.label == "o"
    assert obs.n_obs <= 200
    assert np.all(np.diff(obs.timestamps) > 0)
    # every observation sits on a grid point with that point's value
    idx = np.round((obs.timestamps - path.start) / path.step).astype(int)
    np.testing.assert_allclose(obs.timestamps, path.start + path.step * idx,
                               atol=1e-9)
    np.testing.assert_array_equal(obs.values, path.values[idx])


def test_sample_irregular_saturates_to_full_grid():
    path = RegularSeries(0.0, 1.0, np.arange(50, dtype=np.float64))
    obs = sample_irregular(path, 50, seed=12)
    assert obs.n_obs == 50
    np.testing.assert_array_equal(obs.values, path.values)
    with pytest.raises(ConfigError):
        sample_irregular(path, 500, seed=12)


def test_sample_irregular_determinism():
    path = RegularSeries(0.0, 0.01, np.random.default_rng(13).standard_normal(5000))
    a = sample_irregular(path, 300, seed=14)
    b = sample_irregular(path, 300, seed=14)
    np.testing.assert_array_equal(a.timestamps, b.timestamps)
    np.testing.assert_array_equal(a.values, b.values)


def test_add_observation_noise():
    s = RegularSeries(0.0, 1.0, np.zeros(512)).to_irregular()
    noisy = add_observation_noise(s, 0.5, seed=15)
    assert np.std(noisy.values) == pytest.approx(0.5, rel=0.2)
    silent = add_observation_noise(s, 0.0, seed=15)
    np.testing.assert_array_equal(silent.values, s.values)
    with pytest.raises(ConfigError):
        add_observation_noise(s, -1.0, seed=15)
