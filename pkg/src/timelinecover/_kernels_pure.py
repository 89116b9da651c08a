"""NumPy fallback for the max-plus layer kernels.

Same contracts as the compiled ``_kernels`` extension; selected at import
time by :mod:`timelinecover.engine` when the extension is unavailable.
"""

from __future__ import annotations

import numpy as np


def project_max(vals, pre, r, post, w, out, arg):
    """out[p, q] = max_s vals[p, s, q] + w[s]; arg records the maximizing s."""
    block = vals.reshape(pre, r, post) + w[None, :, None]
    a = block.argmax(axis=1)
    out[:] = np.take_along_axis(block, a[:, None, :], axis=1).reshape(-1)
    arg[:] = a.astype(np.int32).reshape(-1)


def trans_max(vals, pre, r_old, post, r_new, m, out, arg):
    """out[p, s_new, q] = max_{s_old} vals[p, s_old, q] + m[s_old, s_new]."""
    block = vals.reshape(pre, r_old, 1, post) + m[None, :, :, None]
    a = block.argmax(axis=1)
    best = np.take_along_axis(block, a[:, None, :, :], axis=1)
    out[:] = best.reshape(-1)
    arg[:] = a.astype(np.int32).reshape(-1)
