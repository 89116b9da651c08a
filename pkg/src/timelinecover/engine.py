"""Selects the layer-kernel implementation: compiled extension or NumPy fallback.

The compiled module is optional; ``TIMELINECOVER_ENGINE`` (auto, compiled,
pure) overrides the default choice, and :func:`set_engine` does the same
programmatically (used by the benchmark harness and the equivalence tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_pure

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_FORCED: str | None = None


def compiled_available() -> bool:
    return _compiled is not None


def set_engine(name: str | None) -> None:
    """Force 'compiled' or 'pure'; None or 'auto' restores the default."""
    global _FORCED
    if name in (None, "auto"):
        _FORCED = None
        return
    if name not in ("compiled", "pure"):
        raise ValueError(f"unknown engine {name!r}")
    if name == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernels are not available in this install")
    _FORCED = name


def active_engine() -> str:
    choice = _FORCED or os.environ.get("TIMELINECOVER_ENGINE", "auto")
    if choice == "pure":
        return "pure"
    if choice == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels requested but not available")
        return "compiled"
    return "compiled" if _compiled is not None else "pure"


def _ops():
    return _compiled if active_engine() == "compiled" else _kernels_pure


def project_max(vals: np.ndarray, pre: int, r: int, post: int, w: np.ndarray):
    """Max-project the middle axis of a flat (pre, r, post) block, adding w[s]."""
    out = np.empty(pre * post, dtype=np.int64)
    arg = np.empty(pre * post, dtype=np.int32)
    _ops().project_max(vals, pre, r, post, w, out, arg)
    return out, arg


def trans_max(vals: np.ndarray, pre: int, r_old: int, post: int, r_new: int, m: np.ndarray):
    """Replace the middle axis by s_new, maximizing vals + m[s_old, s_new]."""
    out = np.empty(pre * r_new * post, dtype=np.int64)
    arg = np.empty(pre * r_new * post, dtype=np.int32)
    _ops().trans_max(vals, pre, r_old, post, r_new, m, out, arg)
    return out, arg
