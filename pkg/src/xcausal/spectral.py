"""Fourier projection, cross-spectra and inversion to correlograms.

The pipeline projects each (demeaned) series onto a reduced one-sided
frequency grid with a direct non-uniform DFT, forms cross- and
auto-spectra per frequency, optionally smooths across neighbouring
frequencies, and inverts back onto a lag grid to get a normalized
cross-correlogram. The projection is the only pass over raw data;
everything after it works on P complex numbers per series.

The inversion evaluates, for each lag h,

    gamma(h) = (1/P) * sum_l Re[ cross_l * exp(-i * l * delta_f * h) ]

so that when y is a delayed copy of x the correlogram peaks at a
positive lag equal to the delay (the sign of the exponent is pinned by
that requirement together with cross_l = proj_x * conj(proj_y); see the
time-shift test). The discarded imaginary remainder is reported, not
hidden: it stays at rounding level for genuine stochastic lag structure
and grows when the lag structure is deterministic for the grid.
"""

import struct
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import CrossCorrelogram, FrequencyGrid
from .errors import (
    DegenerateVarianceError,
    GridMismatchError,
    NotCenteredError,
    SignatureFormatError,
    WindowTooWideError,
)

# |mean| must be below this times the standard deviation to count as
# centered; exact zero passes regardless (the zero series is centered).
CENTERED_TOLERANCE = 1e-9

SIGNATURE_MAGIC = b"XCSG"
SIGNATURE_VERSION = 1


def _readonly_complex(values, count, name):
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] != count:
        raise ValueError(f"{name} must have length {count}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class FourierProjection:
    """Projection coefficients of one series on a frequency grid."""

    grid: FrequencyGrid
    coeffs: np.ndarray
    n_obs: int
    label: str = ""

    def __post_init__(self):
        c = _readonly_complex(self.coeffs, self.grid.count, "coeffs")
        if int(self.n_obs) < 0:
            raise ValueError(f"n_obs must be >= 0, got {self.n_obs}")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "n_obs", int(self.n_obs))


@dataclass(frozen=True)
class CrossSpectrum:
    """Per-frequency cross products on a frequency grid."""

    grid: FrequencyGrid
    values: np.ndarray

    def __post_init__(self):
        v = _readonly_complex(self.values, self.grid.count, "values")
        object.__setattr__(self, "values", v)


def same_grid(a, b):
    return a.delta_f == b.delta_f and a.count == b.count


def _require_same_grid(a, b, what):
    if not same_grid(a, b):
        raise GridMismatchError(
            f"{what}: frequency grids differ "
            f"({a.delta_f}, {a.count}) vs ({b.delta_f}, {b.count})"
        )


def project(series, grid, require_centered=True):
    """Project a series: coeffs[l-1] = sum_n x_n * exp(-i*l*delta_f*t_n).

    The series must be demeaned first (a nonzero mean leaks into every
    frequency since l = 0 is not on the grid). Partial projections of
    shards of an already-centered series may pass require_centered=False;
    their sum equals the full projection regardless of shard means.
    """
    if require_centered:
        mu = float(np.mean(series.values))
        sd = float(np.std(series.values))
        if mu != 0.0 and not (abs(mu) < CENTERED_TOLERANCE * sd):
            raise NotCenteredError(
                f"series {series.label!r} has mean {mu:.3g} "
                f"(stdev {sd:.3g}); demean it before projecting"
            )
    coeffs = _backend.nudft(series.timestamps, series.values, grid.delta_f, grid.count)
    return FourierProjection(grid=grid, coeffs=coeffs, n_obs=series.n_obs,
                             label=series.label)


def zero_projection(grid, label=""):
    """The projection of nothing: additive identity for merge."""
    return FourierProjection(grid=grid, coeffs=np.zeros(grid.count, np.complex128),
                             n_obs=0, label=label)


def merge(a, b):
    """Combine partial projections of one series by complex addition."""
    _require_same_grid(a.grid, b.grid, "merge")
    if a.label != b.label:
        raise GridMismatchError(
            f"merge: labels differ ({a.label!r} vs {b.label!r}); "
            "partial projections must come from the same series"
        )
    return FourierProjection(grid=a.grid, coeffs=a.coeffs + b.coeffs,
                             n_obs=a.n_obs + b.n_obs, label=a.label)


def cross_spectrum(px, py):
    """Per-frequency product proj_x * conj(proj_y)."""
    _require_same_grid(px.grid, py.grid, "cross_spectrum")
    return CrossSpectrum(grid=px.grid, values=px.coeffs * np.conj(py.coeffs))


def auto_spectrum(p):
    return cross_spectrum(p, p)


def smooth(spec, half_width):
    """Moving mean across 2*half_width+1 frequencies, truncated at edges."""
    m = int(half_width)
    if m < 0:
        raise WindowTooWideError(f"half_width must be >= 0, got {half_width}")
    count = spec.grid.count
    if m > 0 and not (m < count / 2):
        raise WindowTooWideError(
            f"half_width {m} too wide for {count} frequencies (needs < {count / 2:g})"
        )
    if m == 0:
        return spec
    csum = np.concatenate(([0.0 + 0.0j], np.cumsum(spec.values)))
    pos = np.arange(count)
    lo = np.maximum(pos - m, 0)
    hi = np.minimum(pos + m + 1, count)
    return CrossSpectrum(grid=spec.grid, values=(csum[hi] - csum[lo]) / (hi - lo))


def invert_to_correlogram(cross, auto_x, auto_y, lag_grid):
    """Inverse transform of a cross-spectrum onto a symmetric lag grid.

    gamma(h) = (1/P) sum_l Re[values_l exp(-i l delta_f h)], normalized by
    sqrt(gamma_xx(0) * gamma_yy(0)) from the two auto-spectra. Pass autos
    processed identically to the cross (same whitening, same smoothing),
    or the normalization is not a correlation.
    """
    _require_same_grid(cross.grid, auto_x.grid, "invert_to_correlogram")
    _require_same_grid(cross.grid, auto_y.grid, "invert_to_correlogram")
    gxx0 = float(np.mean(auto_x.values.real))
    gyy0 = float(np.mean(auto_y.values.real))
    if gxx0 <= 0.0 or gyy0 <= 0.0:
        raise DegenerateVarianceError(
            f"zero-lag autocovariances must be positive, got {gxx0:.3g}, {gyy0:.3g}"
        )
    norm = np.sqrt(gxx0 * gyy0)
    gamma, max_imag = _backend.inverse_correlogram(
        cross.values, cross.grid.delta_f, lag_grid.lags()
    )
    return CrossCorrelogram(lag_grid=lag_grid, rho=gamma / norm,
                            imag_residual=max_imag / norm)


def signature_n_bytes(label, count):
    """Size in bytes of one serialized projection record."""
    return 28 + len(label.encode("utf-8")) + 16 * count


def serialize_signature(p):
    """Pack a projection as a self-describing little-endian record.

    Layout: magic "XCSG", version u16, label length u16, label bytes,
    delta_f f64, count u32, n_obs u64, then count (re, im) f64 pairs.
    """
    label_b = p.label.encode("utf-8")
    if len(label_b) > 0xFFFF:
        raise ValueError("label too long to serialize")
    head = SIGNATURE_MAGIC + struct.pack("<HH", SIGNATURE_VERSION, len(label_b))
    meta = struct.pack("<dIQ", p.grid.delta_f, p.grid.count, p.n_obs)
    body = np.ascontiguousarray(p.coeffs).astype("<c16").tobytes()
    return head + label_b + meta + body


def parse_signature(data):
    """Inverse of serialize_signature."""
    if len(data) < 8 or data[:4] != SIGNATURE_MAGIC:
        raise SignatureFormatError("not a projection record (bad magic)")
    version, label_len = struct.unpack_from("<HH", data, 4)
    if version != SIGNATURE_VERSION:
        raise SignatureFormatError(f"unsupported record version {version}")
    offset = 8
    if len(data) < offset + label_len + 20:
        raise SignatureFormatError("truncated projection record")
    label = data[offset:offset + label_len].decode("utf-8")
    offset += label_len
    delta_f, count, n_obs = struct.unpack_from("<dIQ", data, offset)
    offset += 20
    expected = offset + 16 * count
    if len(data) != expected:
        raise SignatureFormatError(
            f"record length {len(data)} does not match header (expected {expected})"
        )
    coeffs = np.frombuffer(data, dtype="<c16", count=count, offset=offset)
    return FourierProjection(grid=FrequencyGrid(delta_f, count),
                             coeffs=coeffs.astype(np.complex128),
                             n_obs=int(n_obs), label=label)


def write_signature(path, p):
    with open(path, "wb") as fh:
        fh.write(serialize_signature(p))


def read_signature(path):
    with open(path, "rb") as fh:
        return parse_signature(fh.read())
