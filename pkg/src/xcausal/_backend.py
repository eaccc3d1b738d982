"""Backend selection for the hot kernels.

Prefers the compiled extension, falls back to the numpy implementation.
Set XCAUSAL_BACKEND=python or XCAUSAL_BACKEND=compiled to force one;
forcing "compiled" raises if the extension is missing instead of silently
degrading.
"""

import os

from . import _kernels_np

_FORCED = os.environ.get("XCAUSAL_BACKEND", "").strip().lower()
if _FORCED not in ("", "compiled", "python"):
    raise ImportError(
        f"XCAUSAL_BACKEND must be 'compiled' or 'python', got {_FORCED!r}"
    )

_impl = None
if _FORCED != "python":
    try:
        from . import _kernels as _impl
    except ImportError:
        if _FORCED == "compiled":
            raise ImportError(
                "XCAUSAL_BACKEND=compiled but the compiled kernels are not built"
            ) from None
        _impl = None
if _impl is None:
    _impl = _kernels_np

BACKEND = _impl.BACKEND_NAME
nudft = _impl.nudft
inverse_correlogram = _impl.inverse_correlogram
hy_overlap_sum = _impl.hy_overlap_sum


def available_backends():
    """Name -> module for every backend importable in this environment."""
    found = {"python": _kernels_np}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["compiled"] = _kernels
    return found
