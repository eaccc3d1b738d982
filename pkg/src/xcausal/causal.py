"""Causal read-outs from cross-correlograms.

The Lead-Lag Ratio compares squared correlation mass at positive versus
negative lags. Correlograms here follow the convention rho(h) ~
corr(X_{t-h}, Y_t), so a pair where x drives y with delay tau peaks at
h = +tau and pushes the ratio above 1; the mapping of llr > 1 to
"X causes Y" below is verified against kernel-driven simulations with
known direction (see tests), not assumed.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import CrossCorrelogram, require_same_lag_grid
from .errors import ConfigError, TooFewTrialsError

DEFAULT_THETA = 0.2

X_CAUSES_Y = "X_causes_Y"
Y_CAUSES_X = "Y_causes_X"
SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class LlrResult:
    """Lead-Lag Ratio and the associated delay read-out.

    llr is sum(rho^2 at h>0) / sum(rho^2 at h<0), +inf when the
    denominator is exactly zero. delay is the lag of the largest rho
    (ties broken toward the smallest |h|, then the positive side);
    interpreted as the characteristic causation delay.
    """

    llr: float
    delay: float
    peak_rho: float
    direction: str
    n_pos: int
    n_neg: int


def llr(correlogram, theta=DEFAULT_THETA):
    """Lead-Lag Ratio, characteristic delay and direction call.

    Direction: X_causes_Y when llr > 1+theta, Y_causes_X when
    llr < 1/(1+theta), symmetric in between. h = 0 never enters the
    sums, so instantaneous correlation cannot fake a direction.
    """
    if not (theta >= 0.0):
        raise ConfigError(f"theta must be >= 0, got {theta}")
    grid = correlogram.lag_grid
    half = grid.half_count
    rho = correlogram.rho
    neg = rho[:half]
    pos = rho[half + 1:]
    pos_mass = float(np.dot(pos, pos))
    neg_mass = float(np.dot(neg, neg))

    if neg_mass == 0.0:
        ratio = math.inf
    else:
        ratio = pos_mass / neg_mass

    # Scan lags outward (0, +dh, -dh, +2dh, ...) keeping the first strict
    # maximum: ties resolve to the smallest |h| and then the positive side.
    center = half
    best_idx = center
    best = rho[center]
    for k in range(1, half + 1):
        for idx in (center + k, center - k):
            if rho[idx] > best:
                best = rho[idx]
                best_idx = idx
    delay = float((best_idx - center) * grid.delta_h)

    if ratio > 1.0 + theta:
        direction = X_CAUSES_Y
    elif ratio < 1.0 / (1.0 + theta):
        direction = Y_CAUSES_X
    else:
        direction = SYMMETRIC
    return LlrResult(llr=ratio, delay=delay, peak_rho=float(best),
                     direction=direction, n_pos=half, n_neg=half)


@dataclass(frozen=True)
class PercentileBand:
    """Per-lag 5th/50th/95th percentiles over Monte Carlo trials."""

    lag_grid: object
    p05: np.ndarray
    p50: np.ndarray
    p95: np.ndarray

    def __post_init__(self):
        for name in ("p05", "p50", "p95"):
            arr = np.asarray(getattr(self, name), dtype=np.float64).copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        if not (np.all(self.p05 <= self.p50) and np.all(self.p50 <= self.p95)):
            raise ValueError("percentiles must be ordered p05 <= p50 <= p95")


def percentile_band(correlograms, min_trials=20):
    """Empirical 5/50/95 band of rho(h) across trials.

    min_trials guards against reading noise as a band; unit tests may
    relax it explicitly.
    """
    cs = list(correlograms)
    if len(cs) < min_trials:
        raise TooFewTrialsError(
            f"need at least {min_trials} trials for a band, got {len(cs)}"
        )
    grid = cs[0].lag_grid
    for c in cs[1:]:
        require_same_lag_grid(grid, c.lag_grid, "percentile_band")
    stack = np.stack([c.rho for c in cs])
    p05, p50, p95 = np.percentile(stack, [5.0, 50.0, 95.0], axis=0)
    return PercentileBand(lag_grid=grid, p05=p05, p50=p50, p95=p95)


def daily_average(correlograms):
    """Element-wise mean correlogram across days (or trials)."""
    cs = list(correlograms)
    if not cs:
        raise ConfigError("daily_average needs at least one correlogram")
    grid = cs[0].lag_grid
    for c in cs[1:]:
        require_same_lag_grid(grid, c.lag_grid, "daily_average")
    mean_rho = np.mean(np.stack([c.rho for c in cs]), axis=0)
    residual = max(c.imag_residual for c in cs)
    return CrossCorrelogram(lag_grid=grid, rho=mean_rho, imag_residual=residual)
