"""Core data types and ingestion helpers.

The package works with two sampling models: IrregularSeries (explicit
timestamps, the native input) and RegularSeries (a fixed-step grid, used
by the time-domain baselines and the synthetic generators). Grids for the
spectral side live here too so every module agrees on their invariants.

All arrays are float64 and marked read-only once validated; operations
return new objects instead of mutating.
"""

import csv
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CsvFormatError,
    EmptySeriesError,
    GridMismatchError,
    NonFiniteError,
)

# Tolerance for the |rho| <= 1 invariant; finite-sample estimators are
# allowed this much slack before we call the normalization broken.
RHO_TOLERANCE = 1e-6


def _as_readonly(values, name):
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains NaN or infinity")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class IrregularSeries:
    """Observations (t_n, x_n) with strictly increasing timestamps."""

    timestamps: np.ndarray
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        t = _as_readonly(self.timestamps, "timestamps")
        v = _as_readonly(self.values, "values")
        if t.shape[0] != v.shape[0]:
            raise ValueError(
                f"timestamps and values differ in length: {t.shape[0]} vs {v.shape[0]}"
            )
        if t.shape[0] < 2:
            raise EmptySeriesError("a series needs at least two observations")
        if np.any(np.diff(t) <= 0):
            raise ValueError(
                "timestamps must be strictly increasing; "
                "use dedup_and_sort on raw observation pairs"
            )
        object.__setattr__(self, "timestamps", t)
        object.__setattr__(self, "values", v)

    @property
    def n_obs(self):
        return int(self.timestamps.shape[0])

    @property
    def span(self):
        return float(self.timestamps[-1] - self.timestamps[0])

    @property
    def mean_gap(self):
        return self.span / (self.n_obs - 1)


@dataclass(frozen=True)
class RegularSeries:
    """Values on the uniform grid start + n*step, n = 0..len-1."""

    start: float
    step: float
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        if not (self.step > 0):
            raise ValueError(f"step must be positive, got {self.step}")
        v = _as_readonly(self.values, "values")
        if v.shape[0] < 2:
            raise EmptySeriesError("a series needs at least two observations")
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "values", v)

    def __len__(self):
        return int(self.values.shape[0])

    def timestamps(self):
        return self.start + self.step * np.arange(len(self))

    def to_irregular(self, label=None):
        return IrregularSeries(
            self.timestamps(),
            self.values,
            label=self.label if label is None else label,
        )


@dataclass(frozen=True)
class FrequencyGrid:
    """Reduced one-sided grid {l * delta_f : l = 1..count}; l = 0 excluded."""

    delta_f: float
    count: int

    def __post_init__(self):
        if not (float(self.delta_f) > 0):
            raise ValueError(f"delta_f must be positive, got {self.delta_f}")
        if int(self.count) < 2:
            raise ValueError(f"count must be at least 2, got {self.count}")
        object.__setattr__(self, "delta_f", float(self.delta_f))
        object.__setattr__(self, "count", int(self.count))

    def frequencies(self):
        return self.delta_f * np.arange(1, self.count + 1)

    @staticmethod
    def for_span(span, count):
        """Grid whose fundamental frequency matches an observation span."""
        if not (span > 0):
            raise ValueError(f"span must be positive, got {span}")
        return FrequencyGrid(2.0 * np.pi / span, count)


@dataclass(frozen=True)
class LagGrid:
    """Symmetric lags {k * delta_h : k = -half_count..half_count}."""

    delta_h: float
    half_count: int

    def __post_init__(self):
        if not (float(self.delta_h) > 0):
            raise ValueError(f"delta_h must be positive, got {self.delta_h}")
        if int(self.half_count) < 1:
            raise ValueError(f"half_count must be at least 1, got {self.half_count}")
        object.__setattr__(self, "delta_h", float(self.delta_h))
        object.__setattr__(self, "half_count", int(self.half_count))

    def lags(self):
        return self.delta_h * np.arange(-self.half_count, self.half_count + 1)

    def __len__(self):
        return 2 * self.half_count + 1


@dataclass(frozen=True)
class CrossCorrelogram:
    """Normalized cross-correlation rho(h) on a symmetric lag grid.

    Positive lags mean the first series leads: rho(h) estimates
    corr(X_{t-h}, Y_t), so mass at h > 0 is evidence that X drives Y.
    imag_residual is the largest imaginary remainder of the inverse
    transform relative to the normalization, zero for time-domain
    estimators; values far above ~1e-10 indicate a grid problem.
    """

    lag_grid: LagGrid
    rho: np.ndarray
    imag_residual: float = 0.0

    def __post_init__(self):
        r = _as_readonly(self.rho, "rho")
        if r.shape[0] != len(self.lag_grid):
            raise ValueError(
                f"rho has {r.shape[0]} entries for {len(self.lag_grid)} lags"
            )
        if float(np.max(np.abs(r))) > 1.0 + RHO_TOLERANCE:
            raise ValueError(
                f"|rho| reaches {np.max(np.abs(r)):.6g}; normalization is broken"
            )
        if not (float(self.imag_residual) >= 0.0):
            raise ValueError("imag_residual must be non-negative")
        object.__setattr__(self, "rho", r)
        object.__setattr__(self, "imag_residual", float(self.imag_residual))

    def lags(self):
        return self.lag_grid.lags()


def same_lag_grid(a, b):
    return a.delta_h == b.delta_h and a.half_count == b.half_count


def require_same_lag_grid(a, b, what):
    if not same_lag_grid(a, b):
        raise GridMismatchError(
            f"{what}: lag grids differ "
            f"({a.delta_h}, {a.half_count}) vs ({b.delta_h}, {b.half_count})"
        )


def dedup_and_sort(pairs, label=""):
    """Build an IrregularSeries from raw (timestamp, value) pairs.

    Observations are stably sorted by timestamp; when a timestamp repeats,
    the pair that appeared last in the input wins (later records supersede
    earlier ones in append-style feeds).
    """
    arr = np.asarray(list(pairs) if not isinstance(pairs, np.ndarray) else pairs,
                     dtype=np.float64)
    if arr.size == 0:
        raise EmptySeriesError("no observations")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected (timestamp, value) pairs, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("observations contain NaN or infinity")

    order = np.argsort(arr[:, 0], kind="stable")
    t = arr[order, 0]
    v = arr[order, 1]
    # After a stable sort, equal timestamps keep input order; the last of
    # each run is the surviving record.
    keep = np.concatenate((t[1:] != t[:-1], [True]))
    t = t[keep]
    v = v[keep]
    if t.shape[0] < 2:
        raise EmptySeriesError(
            f"only {t.shape[0]} distinct timestamp(s) after deduplication"
        )
    return IrregularSeries(t, v, label=label)


def demean(series):
    """Subtract the sample mean of the values; timestamps unchanged."""
    centered = series.values - np.mean(series.values)
    return IrregularSeries(series.timestamps, centered, label=series.label)


def read_series_csv(path, label=None, drop_bad_rows=False):
    """Read timestamp,value rows into an IrregularSeries.

    A single header row is tolerated if its first field is not numeric.
    Any later unparseable row raises CsvFormatError naming its 1-based
    line number, unless drop_bad_rows is set, in which case bad rows are
    skipped with a warning. Rows are deduplicated and sorted, so unsorted
    feeds are accepted.
    """
    pairs = []
    bad_lines = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        saw_data = False
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                if not saw_data and lineno == 1:
                    continue  # header with extra columns
                bad_lines.append(lineno)
                continue
            try:
                t = float(row[0])
                v = float(row[1])
            except ValueError:
                if not saw_data and lineno == 1:
                    continue  # header row
                bad_lines.append(lineno)
                continue
            saw_data = True
            pairs.append((t, v))

    if bad_lines and not drop_bad_rows:
        shown = ", ".join(str(n) for n in bad_lines[:5])
        more = "" if len(bad_lines) <= 5 else f" (+{len(bad_lines) - 5} more)"
        raise CsvFormatError(
            f"{path}: unparseable row(s) at line {shown}{more}; "
            "expected timestamp,value"
        )
    if bad_lines:
        warnings.warn(
            f"{path}: dropped {len(bad_lines)} unparseable row(s)",
            stacklevel=2,
        )
    if not pairs:
        raise EmptySeriesError(f"{path}: no data rows")
    if label is None:
        label = ""
    return dedup_and_sort(pairs, label=label)


def write_series_csv(path, series, header=True):
    """Write a series as timestamp,value rows (repr-precision floats)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if header:
            writer.writerow(["timestamp", "value"])
        for t, v in zip(series.timestamps, series.values):
            writer.writerow([repr(float(t)), repr(float(v))])
