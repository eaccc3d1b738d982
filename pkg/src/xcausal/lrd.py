"""Long-range dependence handling.

Persistent processes put a pole of order 2H+1 at zero frequency; left in
place it makes cross-correlogram estimates spurious with non-vanishing
variance. This module estimates the Hurst exponent from the low-frequency
auto-spectrum, cancels the pole by multiplying projection coefficients
with (i*f)^(H+1/2), and provides the time-domain fractional-differencing
equivalent used to validate that frequency-domain shortcut.
"""

from dataclasses import dataclass

import numpy as np

from .core import RegularSeries
from .errors import (
    AlphaOutOfRangeError,
    ConfigError,
    DegenerateVarianceError,
    TooFewFrequenciesError,
    TruncationTooLongError,
)
from .spectral import FourierProjection, auto_spectrum

ALPHA_RANGE = (0.0, 2.0)
# Whitening exponents from estimated H are clamped here so estimation
# noise cannot blow up the highest frequencies.
WHITEN_ALPHA_CAP = 1.5
HURST_CLIP = (0.01, 0.99)
MIN_REGRESSION_POINTS = 8
DEFAULT_LOW_FRACTION = 0.1
DEFAULT_TRUNCATION = 256


@dataclass(frozen=True)
class HurstEstimate:
    """Log-log periodogram regression result.

    hurst = (-slope - 1) / 2, clipped to HURST_CLIP with `clipped` set
    when the raw value fell outside.
    """

    hurst: float
    slope: float
    stderr: float
    n_freqs_used: int
    clipped: bool


def _ols_slope(x, y):
    """Least-squares slope and its standard error."""
    n = x.shape[0]
    xc = x - x.mean()
    yc = y - y.mean()
    sxx = float(np.dot(xc, xc))
    slope = float(np.dot(xc, yc)) / sxx
    resid = yc - slope * xc
    dof = n - 2
    stderr = float(np.sqrt(np.dot(resid, resid) / dof / sxx)) if dof > 0 else 0.0
    return slope, stderr


def estimate_hurst(auto, low_fraction=DEFAULT_LOW_FRACTION):
    """Hurst exponent from the lowest low_fraction of an auto-spectrum.

    Regresses log power on log frequency; a pole of order 2H+1 shows up
    as slope -(2H+1). Only the lowest frequencies carry the pole, hence
    the window.
    """
    if not (0.0 < low_fraction <= 0.5):
        raise ConfigError(f"low_fraction must be in (0, 0.5], got {low_fraction}")
    count = auto.grid.count
    n_low = int(np.ceil(low_fraction * count))
    if n_low < MIN_REGRESSION_POINTS:
        raise TooFewFrequenciesError(
            f"regression window has {n_low} frequencies; "
            f"needs at least {MIN_REGRESSION_POINTS}"
        )
    power = auto.values.real[:n_low]
    if np.any(power <= 0.0):
        raise DegenerateVarianceError(
            "auto-spectrum must be strictly positive over the regression window"
        )
    freqs = auto.grid.frequencies()[:n_low]
    slope, stderr = _ols_slope(np.log(freqs), np.log(power))
    raw = (-slope - 1.0) / 2.0
    lo, hi = HURST_CLIP
    hurst = min(max(raw, lo), hi)
    return HurstEstimate(hurst=hurst, slope=slope, stderr=stderr,
                         n_freqs_used=n_low, clipped=(hurst != raw))


def pole_eliminate(p, alpha):
    """Multiply coefficients by (i*f)^alpha (principal branch, f > 0).

    This is differentiation of order alpha performed in the frequency
    domain: (i*f)^alpha = f^alpha * exp(i*alpha*pi/2).
    """
    lo, hi = ALPHA_RANGE
    if not (lo <= alpha <= hi):
        raise AlphaOutOfRangeError(f"alpha must be in [{lo}, {hi}], got {alpha}")
    f = p.grid.frequencies()
    multiplier = f ** alpha * np.exp(1j * alpha * np.pi / 2.0)
    return FourierProjection(grid=p.grid, coeffs=p.coeffs * multiplier,
                             n_obs=p.n_obs, label=p.label)


def whiten_alpha(hurst):
    """Whitening order for a given Hurst exponent, clamped for safety."""
    return min(max(hurst + 0.5, 0.0), WHITEN_ALPHA_CAP)


def whiten_pair(px, py, hurst_x, hurst_y):
    """Cancel each projection's spectral pole using its own H estimate."""
    return (pole_eliminate(px, whiten_alpha(hurst_x)),
            pole_eliminate(py, whiten_alpha(hurst_y)))


def flatness_slope(p, low_fraction=DEFAULT_LOW_FRACTION):
    """Residual log-log slope of a (whitened) projection's auto-spectrum.

    Near zero means the pole is gone; report |slope| > 0.3 to the user as
    a whitening-quality warning.
    """
    return estimate_hurst(auto_spectrum(p), low_fraction).slope


def frac_diff_weights(alpha, truncation):
    """Binomial weights of (1-B)^alpha: w_0 = 1, w_h = w_{h-1}(h-1-alpha)/h."""
    lo, hi = ALPHA_RANGE
    if not (lo <= alpha <= hi):
        raise AlphaOutOfRangeError(f"alpha must be in [{lo}, {hi}], got {alpha}")
    k = int(truncation)
    if k < 0:
        raise ConfigError(f"truncation must be >= 0, got {truncation}")
    steps = np.arange(1, k + 1, dtype=np.float64)
    return np.concatenate(([1.0], np.cumprod((steps - 1.0 - alpha) / steps)))


def frac_diff_time(series, alpha, truncation=DEFAULT_TRUNCATION):
    """Fractional differencing on a regular grid, truncated at `truncation`.

    Output keeps the input grid; the first `truncation` values are
    burn-in (the backward sum is cut short there) and should be excluded
    from any comparison.
    """
    k = int(truncation)
    if k > len(series):
        raise TruncationTooLongError(
            f"truncation {k} exceeds series length {len(series)}"
        )
    w = frac_diff_weights(alpha, k)
    out = np.convolve(series.values, w)[:len(series)]
    return RegularSeries(start=series.start, step=series.step, values=out,
                         label=series.label)
