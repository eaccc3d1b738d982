"""Pure-numpy implementations of the hot kernels.

This is the fallback backend used when the compiled extension is not
available. Both backends implement the same three functions with identical
semantics; tests run against each. The projection and inversion use the
same phase-recurrence evaluation as the compiled code (w_{l+1} = w_l * z
per observation), so the accumulated phase drift is a few units of
P * machine-epsilon for either backend.
"""

import numpy as np

BACKEND_NAME = "python"


def nudft(timestamps, values, delta_f, count):
    """Non-uniform DFT on the reduced grid {l * delta_f : l = 1..count}.

    Returns coeffs[l-1] = sum_n values[n] * exp(-1j * l * delta_f * t[n]).
    """
    t = np.ascontiguousarray(timestamps, dtype=np.float64)
    v = np.ascontiguousarray(values, dtype=np.float64)
    out = np.empty(count, dtype=np.complex128)
    z = np.exp(t * (-1j * delta_f))
    w = z.copy()
    # Two real dot products per frequency instead of one complex one:
    # avoids re-promoting v to complex128 on every iteration.
    out[0] = np.dot(w.real, v) + 1j * np.dot(w.imag, v)
    for l in range(1, count):
        w *= z
        out[l] = np.dot(w.real, v) + 1j * np.dot(w.imag, v)
    return out


def inverse_correlogram(spec_values, delta_f, lags):
    """Inverse transform of a one-sided spectrum onto a set of lags.

    For each lag h: s(h) = (1/P) * sum_l spec_values[l-1] * exp(-1j * l * delta_f * h).
    Returns (real parts, max absolute imaginary part).
    """
    vals = np.ascontiguousarray(spec_values, dtype=np.complex128)
    h = np.ascontiguousarray(lags, dtype=np.float64)
    count = vals.shape[0]
    ell = np.arange(1, count + 1, dtype=np.float64)
    # Lags are few (hundreds), frequencies can be thousands: build the
    # phase matrix lag-by-lag to keep peak memory at one row.
    gamma = np.empty(h.shape[0], dtype=np.float64)
    max_imag = 0.0
    for m in range(h.shape[0]):
        s = np.dot(vals, np.exp(ell * (-1j * delta_f * h[m]))) / count
        gamma[m] = s.real
        if abs(s.imag) > max_imag:
            max_imag = abs(s.imag)
    return gamma, max_imag


def hy_overlap_sum(x_start, x_end, dx, y_start, y_end, dy):
    """Sum of dx_i * dy_j over strictly overlapping interval pairs.

    Intervals [x_start_i, x_end_i) and [y_start_j, y_end_j) overlap
    strictly when x_start_i < y_end_j and y_start_j < x_end_i. Both
    interval lists must be sorted and non-overlapping within a series,
    which holds for consecutive-observation increments.
    """
    xs = np.ascontiguousarray(x_start, dtype=np.float64)
    xe = np.ascontiguousarray(x_end, dtype=np.float64)
    ys = np.ascontiguousarray(y_start, dtype=np.float64)
    ye = np.ascontiguousarray(y_end, dtype=np.float64)
    dxa = np.ascontiguousarray(dx, dtype=np.float64)
    dya = np.ascontiguousarray(dy, dtype=np.float64)

    prefix = np.concatenate(([0.0], np.cumsum(dya)))
    # First y interval with y_end > x_start (strict), first with y_start >= x_end.
    lo = np.searchsorted(ye, xs, side="right")
    hi = np.searchsorted(ys, xe, side="left")
    take = hi > lo
    if not np.any(take):
        return 0.0
    return float(np.dot(dxa[take], prefix[hi[take]] - prefix[lo[take]]))
