"""Seeded synthetic processes for experiments and tests.

Fractional Gaussian noise is generated by circulant embedding, which
reproduces the target autocovariance exactly (up to the eigenvalue guard
below), so statistical tests against closed-form values are meaningful.
Pairs come in two flavours: a causal-kernel-driven pair (y's increments
are noise plus a lagged exponential average of x's increments) and a
lagged surrogate (y is a correlated copy of x read tau seconds late).
Everything is a pure function of (parameters, seed).
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .core import IrregularSeries, RegularSeries
from .errors import ConfigError, EmbeddingFailureError, EmptySeriesError

# Kernel weights below this fraction of the amplitude are dropped.
KERNEL_TRUNCATION = 1e-8
# Circulant eigenvalues may dip this far below zero before we call the
# embedding broken; smaller dips are clipped to zero.
EIGENVALUE_TOLERANCE = 1e-9


def trial_seed(seed, index):
    """Derived seed for one Monte Carlo trial."""
    return int(seed) ^ int(index)


def _seed_sequence(seed):
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def fgn_autocovariance(hurst, n):
    """gamma(k) = (|k+1|^2H - 2|k|^2H + |k-1|^2H) / 2 for k = 0..n-1."""
    k = np.arange(n, dtype=np.float64)
    h2 = 2.0 * hurst
    return 0.5 * (np.abs(k + 1) ** h2 - 2.0 * np.abs(k) ** h2 + np.abs(k - 1) ** h2)


def circulant_spectrum(autocov):
    """Eigenvalues of the symmetric circulant embedding of an autocovariance.

    Raises EmbeddingFailureError when an eigenvalue is materially negative;
    roundoff-level dips are clipped to zero with a warning.
    """
    g = np.asarray(autocov, dtype=np.float64)
    n = g.shape[0]
    row = np.concatenate((g, g[n - 2:0:-1]))
    lam = np.fft.fft(row).real
    low = float(lam.min())
    if low < -EIGENVALUE_TOLERANCE:
        raise EmbeddingFailureError(
            f"circulant embedding has eigenvalue {low:.3e}; "
            "the autocovariance is not embeddable at this length"
        )
    if low < 0.0:
        warnings.warn(
            f"clipped circulant eigenvalues as low as {low:.3e} to zero",
            stacklevel=2,
        )
        lam = np.maximum(lam, 0.0)
    return lam


def simulate_fgn(hurst, n, seed):
    """n fractional-Gaussian-noise increments with unit variance.

    The cumulative sum is a fractional Brownian path. H = 1/2 is plain
    white noise and is drawn directly.
    """
    if not (0.0 < hurst < 1.0):
        raise ConfigError(f"hurst must be in (0, 1), got {hurst}")
    n = int(n)
    if n < 2:
        raise ConfigError(f"need at least 2 increments, got {n}")
    rng = np.random.default_rng(seed)
    if hurst == 0.5:
        return rng.standard_normal(n)

    m = 2 * n - 2
    lam = circulant_spectrum(fgn_autocovariance(hurst, n))
    half = n - 1  # m // 2
    w = np.zeros(m, dtype=np.complex128)
    w[0] = np.sqrt(lam[0] / m) * rng.standard_normal()
    re = rng.standard_normal(half - 1)
    im = rng.standard_normal(half - 1)
    w[1:half] = np.sqrt(lam[1:half] / (2.0 * m)) * (re + 1j * im)
    w[half] = np.sqrt(lam[half] / m) * rng.standard_normal()
    w[half + 1:] = np.conj(w[half - 1:0:-1])
    return np.fft.fft(w)[:n].real


def correlated_pair(hurst, rho, n, seed):
    """Two fGn sequences whose increments correlate instantaneously at rho."""
    if not (-1.0 <= rho <= 1.0):
        raise ConfigError(f"rho must be in [-1, 1], got {rho}")
    s_a, s_b = _seed_sequence(seed).spawn(2)
    a = simulate_fgn(hurst, n, s_a)
    b = simulate_fgn(hurst, n, s_b)
    return a, rho * a + np.sqrt(1.0 - rho * rho) * b


@dataclass(frozen=True)
class CausalKernel:
    """Delayed exponential response: value alpha*exp(-beta*(t-tau)) past tau.

    The kernel is zero before the delay tau, so a driven series can never
    anticipate its driver.
    """

    tau: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not (float(self.tau) >= 0.0):
            raise ConfigError(f"tau must be >= 0, got {self.tau}")
        if not (float(self.beta) >= 0.0):
            raise ConfigError(f"beta must be >= 0, got {self.beta}")
        object.__setattr__(self, "tau", float(self.tau))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    def value(self, t):
        t = np.asarray(t, dtype=np.float64)
        out = np.where(t >= self.tau, self.alpha * np.exp(-self.beta * (t - self.tau)), 0.0)
        return out if out.ndim else float(out)

    def weights(self, step, max_len):
        """Kernel sampled at 0, step, 2*step, ...; truncated where it has
        decayed below KERNEL_TRUNCATION of the amplitude (or at max_len)."""
        if not (step > 0):
            raise ConfigError(f"step must be positive, got {step}")
        if self.alpha == 0.0:
            return np.zeros(1)
        if self.beta > 0.0:
            horizon = self.tau - np.log(KERNEL_TRUNCATION) / self.beta
            length = min(int(np.ceil(horizon / step)) + 1, int(max_len))
        else:
            length = int(max_len)
        length = max(length, 1)
        return self.value(step * np.arange(length))


def brownian_increments(n, step, seed):
    """i.i.d. normal increments with variance = step."""
    rng = np.random.default_rng(seed)
    return rng.normal(0.0, np.sqrt(step), int(n))


def _causal_convolve(dx, w):
    """First len(dx) entries of the full convolution dx * w."""
    n = dx.shape[0]
    k = w.shape[0]
    if n * k <= 1 << 22:
        return np.convolve(dx, w)[:n]
    size = 1
    while size < n + k - 1:
        size <<= 1
    return np.fft.irfft(np.fft.rfft(dx, size) * np.fft.rfft(w, size), size)[:n]


def kernel_drive(x_increments, kernel, step, noise_seed, noise_scale=1.0):
    """Increments of a series driven by x through a causal kernel.

    dY_n = noise_scale * dW_n + sum_k kernel(k*step) * dX_{n-k} * step,
    with dW i.i.d. normal of variance step.
    """
    dx = np.asarray(x_increments, dtype=np.float64)
    n = dx.shape[0]
    dw = brownian_increments(n, step, noise_seed)
    w = kernel.weights(step, n)
    driven = _causal_convolve(dx, w) * step
    return noise_scale * dw + driven


@dataclass(frozen=True)
class PathPair:
    """A pair of regular observable series with known lead-lag ground truth.

    x and y share the grid; by construction x leads: information flows
    x -> y with delay tau (tau = 0 for purely instantaneous coupling).
    Depending on the generator the stored series are either cumulative
    paths (lagged_pair) or increment observables (kernel_pair).
    """

    x: RegularSeries
    y: RegularSeries
    hurst: float
    rho: float
    tau: float

    def __post_init__(self):
        if (self.x.start != self.y.start or self.x.step != self.y.step
                or len(self.x) != len(self.y)):
            raise ConfigError("x and y must share start, step and length")
        if not (0.0 < float(self.hurst) < 1.0):
            raise ConfigError(f"hurst must be in (0, 1), got {self.hurst}")
        if not (-1.0 <= float(self.rho) <= 1.0):
            raise ConfigError(f"rho must be in [-1, 1], got {self.rho}")
        if not (float(self.tau) >= 0.0):
            raise ConfigError(f"tau must be >= 0, got {self.tau}")
        object.__setattr__(self, "hurst", float(self.hurst))
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "tau", float(self.tau))


def kernel_pair(kernel, n, step, seed, noise_scale=1.0, start=0.0):
    """Brownian-innovation driver x and kernel-driven response y.

    The stored series are the increment observables themselves (dX and
    dY per grid step), which is what the causal model couples; their
    cumulative sums are the corresponding paths. Sampling these directly
    keeps the observed process stationary, so the correlogram peak sits
    at the kernel delay without any pole handling.
    """
    s_x, s_noise = _seed_sequence(seed).spawn(2)
    dx = brownian_increments(n, step, s_x)
    dy = kernel_drive(dx, kernel, step, s_noise, noise_scale=noise_scale)
    x = RegularSeries(start, step, dx, label="x")
    y = RegularSeries(start, step, dy, label="y")
    return PathPair(x=x, y=y, hurst=0.5, rho=0.0, tau=kernel.tau)


def lagged_pair(hurst, rho, tau, n, step, seed, start=0.0):
    """Fractional pair where y is a rho-correlated copy of x read tau late.

    tau is snapped to a whole number of grid steps. Increment correlation
    peaks at lag +tau: corr(dX_{t-tau}, dY_t) = rho.
    """
    if not (tau >= 0.0):
        raise ConfigError(f"tau must be >= 0, got {tau}")
    shift = int(round(tau / step))
    a, b = correlated_pair(hurst, rho, int(n) + shift, seed)
    path_x = np.cumsum(a)
    path_c = np.cumsum(b)
    x = RegularSeries(start, step, path_x[shift:], label="x")
    y = RegularSeries(start, step, path_c[:int(n)], label="y")
    return PathPair(x=x, y=y, hurst=hurst, rho=rho, tau=shift * step)


def sample_irregular(path, n_obs, seed, label=None):
    """Observe a regular path at uniformly random times snapped to its grid.

    Timestamps are n_obs uniform order statistics on the path's span,
    rounded to the nearest grid point; duplicates collapse, so the output
    can be slightly shorter than requested. Requesting every point returns
    the full path (saturation: no randomness left to express).
    """
    n_obs = int(n_obs)
    n_path = len(path)
    if n_obs < 2:
        raise ConfigError(f"n_obs must be at least 2, got {n_obs}")
    if n_obs > n_path:
        raise ConfigError(f"n_obs {n_obs} exceeds path length {n_path}")
    if label is None:
        label = path.label
    if n_obs == n_path:
        return path.to_irregular(label=label)

    rng = np.random.default_rng(seed)
    span = path.step * (n_path - 1)
    draws = rng.uniform(0.0, span, n_obs)
    idx = np.unique(np.rint(draws / path.step).astype(np.int64))
    if idx.shape[0] < 2:
        raise EmptySeriesError("sampling collapsed to fewer than 2 points")
    return IrregularSeries(
        path.start + path.step * idx, path.values[idx], label=label
    )


def add_observation_noise(series, scale, seed):
    """Add i.i.d. normal measurement noise to a series' values."""
    if not (scale >= 0.0):
        raise ConfigError(f"scale must be >= 0, got {scale}")
    rng = np.random.default_rng(seed)
    noisy = series.values + rng.normal(0.0, scale, series.n_obs)
    return IrregularSeries(series.timestamps, noisy, label=series.label)
