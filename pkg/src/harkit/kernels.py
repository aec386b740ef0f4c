"""Kernel backend selection.

Imports the compiled extension when available, otherwise the NumPy
fallback. Set HARKIT_KERNELS=numpy (or =compiled) to force a backend;
forcing `compiled` raises if the extension is missing rather than silently
falling back.
"""

from __future__ import annotations

import os

_forced = os.environ.get("HARKIT_KERNELS", "").strip().lower()

if _forced == "numpy":
    from . import _kernels_py as _impl
elif _forced == "compiled":
    from . import _kernels as _impl  # type: ignore[no-redef]
elif _forced:
    raise ImportError(f"HARKIT_KERNELS must be 'numpy' or 'compiled', not {_forced!r}")
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND_NAME

block_average = _impl.block_average
norm3 = _impl.norm3
reduce_series = _impl.reduce_series
batch_window_features = _impl.batch_window_features
single_window_features = _impl.single_window_features
