# cython: language_level=3
"""Compiled hot kernels: non-uniform DFT, inverse transform, overlap sums.

Mirrors _kernels_np exactly; see that module for the contracts. All loops
release the GIL so partitioned projections can use real threads.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin

cnp.import_array()

BACKEND_NAME = "compiled"


def nudft(timestamps, values, double delta_f, Py_ssize_t count):
    t_arr = np.ascontiguousarray(timestamps, dtype=np.float64)
    v_arr = np.ascontiguousarray(values, dtype=np.float64)
    out = np.zeros(count, dtype=np.complex128)

    cdef const double[::1] t = t_arr
    cdef const double[::1] v = v_arr
    # Interleaved (re, im) view of the complex accumulator.
    cdef double[::1] acc = out.view(np.float64)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i, l
    cdef Py_ssize_t count4 = count - (count % 4)
    cdef double ang, zr, zi, tmp, vi, z4r, z4i
    cdef double w0r, w0i, w1r, w1i, w2r, w2i, w3r, w3i

    with nogil:
        for i in range(n):
            ang = delta_f * t[i]
            zr = cos(ang)
            zi = -sin(ang)
            vi = v[i]
            # Four recurrence chains z^1, z^2, z^3, z^4, each stepping by
            # z^4: the chains are independent, so the complex-multiply
            # latency of one no longer serializes the whole row.
            w0r = zr
            w0i = zi
            w1r = w0r * zr - w0i * zi
            w1i = w0r * zi + w0i * zr
            w2r = w1r * zr - w1i * zi
            w2i = w1r * zi + w1i * zr
            w3r = w2r * zr - w2i * zi
            w3i = w2r * zi + w2i * zr
            z4r = w3r
            z4i = w3i
            for l in range(0, count4, 4):
                acc[2 * l] += vi * w0r
                acc[2 * l + 1] += vi * w0i
                acc[2 * l + 2] += vi * w1r
                acc[2 * l + 3] += vi * w1i
                acc[2 * l + 4] += vi * w2r
                acc[2 * l + 5] += vi * w2i
                acc[2 * l + 6] += vi * w3r
                acc[2 * l + 7] += vi * w3i
                tmp = w0r * z4r - w0i * z4i
                w0i = w0r * z4i + w0i * z4r
                w0r = tmp
                tmp = w1r * z4r - w1i * z4i
                w1i = w1r * z4i + w1i * z4r
                w1r = tmp
                tmp = w2r * z4r - w2i * z4i
                w2i = w2r * z4i + w2i * z4r
                w2r = tmp
                tmp = w3r * z4r - w3i * z4i
                w3i = w3r * z4i + w3i * z4r
                w3r = tmp
            # After k full steps chain c holds z^(count4 + c + 1), exactly
            # the remainder frequencies in order.
            if count4 < count:
                acc[2 * count4] += vi * w0r
                acc[2 * count4 + 1] += vi * w0i
            if count4 + 1 < count:
                acc[2 * count4 + 2] += vi * w1r
                acc[2 * count4 + 3] += vi * w1i
            if count4 + 2 < count:
                acc[2 * count4 + 4] += vi * w2r
                acc[2 * count4 + 5] += vi * w2i
    return out


def inverse_correlogram(spec_values, double delta_f, lags):
    vals_arr = np.ascontiguousarray(spec_values, dtype=np.complex128)
    lag_arr = np.ascontiguousarray(lags, dtype=np.float64)
    cdef Py_ssize_t count = vals_arr.shape[0]
    cdef Py_ssize_t n_lags = lag_arr.shape[0]
    gamma = np.empty(n_lags, dtype=np.float64)

    cdef const double[::1] sv = vals_arr.view(np.float64)
    cdef const double[::1] h = lag_arr
    cdef double[::1] g = gamma
    cdef Py_ssize_t m, l
    cdef double ang, zr, zi, wr, wi, tmp, sr, si, max_imag

    max_imag = 0.0
    with nogil:
        for m in range(n_lags):
            ang = delta_f * h[m]
            zr = cos(ang)
            zi = -sin(ang)
            wr = zr
            wi = zi
            sr = 0.0
            si = 0.0
            for l in range(count):
                sr += sv[2 * l] * wr - sv[2 * l + 1] * wi
                si += sv[2 * l] * wi + sv[2 * l + 1] * wr
                tmp = wr * zr - wi * zi
                wi = wr * zi + wi * zr
                wr = tmp
            g[m] = sr / count
            if fabs(si / count) > max_imag:
                max_imag = fabs(si / count)
    return gamma, max_imag


def hy_overlap_sum(x_start, x_end, dx, y_start, y_end, dy):
    xs_arr = np.ascontiguousarray(x_start, dtype=np.float64)
    xe_arr = np.ascontiguousarray(x_end, dtype=np.float64)
    dx_arr = np.ascontiguousarray(dx, dtype=np.float64)
    ys_arr = np.ascontiguousarray(y_start, dtype=np.float64)
    ye_arr = np.ascontiguousarray(y_end, dtype=np.float64)
    dy_arr = np.ascontiguousarray(dy, dtype=np.float64)

    cdef const double[::1] xs = xs_arr
    cdef const double[::1] xe = xe_arr
    cdef const double[::1] dxv = dx_arr
    cdef const double[::1] ys = ys_arr
    cdef const double[::1] ye = ye_arr
    cdef const double[::1] dyv = dy_arr
    cdef Py_ssize_t nx = xs.shape[0]
    cdef Py_ssize_t ny = ys.shape[0]
    cdef Py_ssize_t i, j, lo
    cdef double total, row

    total = 0.0
    lo = 0
    with nogil:
        # Two-pointer sweep: both interval lists are sorted, so the first
        # overlap candidate for x_i never moves backwards.
        for i in range(nx):
            while lo < ny and ye[lo] <= xs[i]:
                lo += 1
            j = lo
            row = 0.0
            while j < ny and ys[j] < xe[i]:
                row += dyv[j]
                j += 1
            total += dxv[i] * row
    return total
