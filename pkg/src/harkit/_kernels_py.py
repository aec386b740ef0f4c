"""NumPy implementation of the hot numeric kernels.

This is the fallback backend; harkit._kernels (Cython) implements the same
interface. Integer codes are the backend ABI and must match the compiled
module:

    sensor: 0=ACC (columns 0..2), 1=GYR (columns 3..5)
    axis:   0=X, 1=Y, 2=Z, 3=V (per-sample Euclidean norm of the triad)
    kind:   0=MEAN, 1=VARIANCE, 2=ENERGY, 3=MAXIMUM, 4=MINIMUM,
            5=ABS_MINIMUM, 6=PEAK_TO_PEAK

All functions take float64 arrays; sample matrices are (n, 6) with columns
ax, ay, az, gx, gy, gz.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def block_average(data: np.ndarray, factor: int) -> np.ndarray:
    """Mean of consecutive length-`factor` blocks, per column.

    Trailing samples that do not fill a block are dropped; output has
    floor(n / factor) rows.
    """
    n_blocks = data.shape[0] // factor
    trimmed = data[: n_blocks * factor]
    return trimmed.reshape(n_blocks, factor, data.shape[1]).mean(axis=1)


def norm3(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Per-sample Euclidean norm sqrt(x^2 + y^2 + z^2)."""
    return np.sqrt(x * x + y * y + z * z)


def reduce_series(series: np.ndarray, kind: int) -> float:
    """Reduce a 1D series to one scalar feature value."""
    if kind == 0:
        return float(np.mean(series))
    if kind == 1:
        return float(np.var(series))
    if kind == 2:
        return float(np.dot(series, series))
    if kind == 3:
        return float(np.max(series))
    if kind == 4:
        return float(np.min(series))
    if kind == 5:
        return float(np.min(np.abs(series)))
    if kind == 6:
        return float(np.max(series) - np.min(series))
    raise ValueError(f"unknown feature kind code {kind}")


def _channel_matrix(data: np.ndarray, n_windows: int, wlen: int, sensor: int, axis: int) -> np.ndarray:
    """(n_windows, wlen) view/array of one channel, windows on rows."""
    base = 3 * sensor
    if axis < 3:
        col = data[: n_windows * wlen, base + axis]
    else:
        block = data[: n_windows * wlen, base : base + 3]
        col = norm3(block[:, 0], block[:, 1], block[:, 2])
    return col.reshape(n_windows, wlen)


def batch_window_features(
    data: np.ndarray,
    wlen: int,
    sensors: np.ndarray,
    axes: np.ndarray,
    kinds: np.ndarray,
) -> np.ndarray:
    """Feature matrix over consecutive non-overlapping windows.

    data is (n, 6); returns (n // wlen, len(kinds)) float64.
    """
    n_windows = data.shape[0] // wlen
    n_specs = len(kinds)
    out = np.empty((n_windows, n_specs), dtype=np.float64)
    for j in range(n_specs):
        ch = _channel_matrix(data, n_windows, wlen, int(sensors[j]), int(axes[j]))
        kind = int(kinds[j])
        if kind == 0:
            out[:, j] = ch.mean(axis=1)
        elif kind == 1:
            out[:, j] = ch.var(axis=1)
        elif kind == 2:
            out[:, j] = np.einsum("ij,ij->i", ch, ch)
        elif kind == 3:
            out[:, j] = ch.max(axis=1)
        elif kind == 4:
            out[:, j] = ch.min(axis=1)
        elif kind == 5:
            out[:, j] = np.abs(ch).min(axis=1)
        elif kind == 6:
            out[:, j] = ch.max(axis=1) - ch.min(axis=1)
        else:
            raise ValueError(f"unknown feature kind code {kind}")
    return out


def single_window_features(
    window: np.ndarray,
    sensors: np.ndarray,
    axes: np.ndarray,
    kinds: np.ndarray,
) -> np.ndarray:
    """Feature vector for one complete (wlen, 6) window."""
    return batch_window_features(window, window.shape[0], sensors, axes, kinds)[0]
