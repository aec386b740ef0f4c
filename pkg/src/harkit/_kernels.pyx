# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot numeric kernels.

Mirrors harkit._kernels_py exactly; see that module for the integer code
ABI (sensor/axis/kind). Selected automatically by harkit.kernels when the
extension built.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

BACKEND_NAME = "compiled"


cdef void _fill_channel(const double[:, ::1] data, Py_ssize_t start, Py_ssize_t n,
                        int sensor, int axis, double[::1] out) noexcept nogil:
    cdef Py_ssize_t i
    cdef Py_ssize_t base = 3 * sensor
    cdef double a, b, c
    if axis < 3:
        for i in range(n):
            out[i] = data[start + i, base + axis]
    else:
        for i in range(n):
            a = data[start + i, base]
            b = data[start + i, base + 1]
            c = data[start + i, base + 2]
            out[i] = sqrt(a * a + b * b + c * c)


cdef double _reduce(const double[::1] buf, Py_ssize_t n, int kind) noexcept nogil:
    cdef Py_ssize_t i
    cdef double acc, m, d, lo, hi
    if kind == 0:  # MEAN
        acc = 0.0
        for i in range(n):
            acc += buf[i]
        return acc / n
    if kind == 1:  # VARIANCE, population form, two-pass
        acc = 0.0
        for i in range(n):
            acc += buf[i]
        m = acc / n
        acc = 0.0
        for i in range(n):
            d = buf[i] - m
            acc += d * d
        return acc / n
    if kind == 2:  # ENERGY
        acc = 0.0
        for i in range(n):
            acc += buf[i] * buf[i]
        return acc
    if kind == 3:  # MAXIMUM
        hi = buf[0]
        for i in range(1, n):
            if buf[i] > hi:
                hi = buf[i]
        return hi
    if kind == 4:  # MINIMUM
        lo = buf[0]
        for i in range(1, n):
            if buf[i] < lo:
                lo = buf[i]
        return lo
    if kind == 5:  # ABS_MINIMUM
        lo = fabs(buf[0])
        for i in range(1, n):
            d = fabs(buf[i])
            if d < lo:
                lo = d
        return lo
    # PEAK_TO_PEAK
    lo = buf[0]
    hi = buf[0]
    for i in range(1, n):
        if buf[i] < lo:
            lo = buf[i]
        if buf[i] > hi:
            hi = buf[i]
    return hi - lo


def block_average(const double[:, ::1] data, Py_ssize_t factor):
    """Mean of consecutive length-`factor` blocks, per column."""
    cdef Py_ssize_t n_blocks = data.shape[0] // factor
    cdef Py_ssize_t n_cols = data.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n_blocks, n_cols), dtype=np.float64)
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t b, j, i
    cdef double acc
    with nogil:
        for b in range(n_blocks):
            for j in range(n_cols):
                acc = 0.0
                for i in range(factor):
                    acc += data[b * factor + i, j]
                ov[b, j] = acc / factor
    return out


def norm3(const double[::1] x, const double[::1] y, const double[::1] z):
    """Per-sample Euclidean norm sqrt(x^2 + y^2 + z^2)."""
    cdef Py_ssize_t n = x.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            ov[i] = sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i])
    return out


def reduce_series(const double[::1] series, int kind):
    """Reduce a 1D series to one scalar feature value."""
    if kind < 0 or kind > 6:
        raise ValueError(f"unknown feature kind code {kind}")
    return _reduce(series, series.shape[0], kind)


def batch_window_features(const double[:, ::1] data, Py_ssize_t wlen,
                          const int[::1] sensors, const int[::1] axes,
                          const int[::1] kinds):
    """Feature matrix over consecutive non-overlapping windows of (n, 6) data."""
    cdef Py_ssize_t n_windows = data.shape[0] // wlen
    cdef Py_ssize_t n_specs = kinds.shape[0]
    cdef Py_ssize_t w, j
    for j in range(n_specs):
        if kinds[j] < 0 or kinds[j] > 6:
            raise ValueError(f"unknown feature kind code {kinds[j]}")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n_windows, n_specs), dtype=np.float64)
    cdef double[:, ::1] ov = out
    cdef cnp.ndarray[cnp.float64_t, ndim=1] scratch = np.empty(wlen, dtype=np.float64)
    cdef double[::1] sv = scratch
    with nogil:
        for w in range(n_windows):
            for j in range(n_specs):
                _fill_channel(data, w * wlen, wlen, sensors[j], axes[j], sv)
                ov[w, j] = _reduce(sv, wlen, kinds[j])
    return out


def single_window_features(const double[:, ::1] window, const int[::1] sensors,
                           const int[::1] axes, const int[::1] kinds):
    """Feature vector for one complete (wlen, 6) window."""
    return batch_window_features(window, window.shape[0], sensors, axes, kinds)[0]
