# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled max-plus layer kernels for the bag-profile dynamic programs.

Arrays are flat C-ordered views of a (pre, r, post) block. Both functions
mirror the NumPy implementations in ``_kernels_pure`` exactly.
"""

from libc.stdint cimport int64_t, int32_t


def project_max(int64_t[::1] vals, Py_ssize_t pre, Py_ssize_t r, Py_ssize_t post,
                int64_t[::1] w, int64_t[::1] out, int32_t[::1] arg):
    """out[p, q] = max_s vals[p, s, q] + w[s]; arg records the maximizing s."""
    cdef Py_ssize_t p, s, q, base, idx
    cdef int64_t best, cand
    cdef int32_t besta
    for p in range(pre):
        for q in range(post):
            base = p * r * post + q
            best = vals[base] + w[0]
            besta = 0
            for s in range(1, r):
                cand = vals[base + s * post] + w[s]
                if cand > best:
                    best = cand
                    besta = <int32_t> s
            idx = p * post + q
            out[idx] = best
            arg[idx] = besta


def trans_max(int64_t[::1] vals, Py_ssize_t pre, Py_ssize_t r_old, Py_ssize_t post,
              Py_ssize_t r_new, int64_t[:, ::1] m, int64_t[::1] out, int32_t[::1] arg):
    """out[p, s_new, q] = max_{s_old} vals[p, s_old, q] + m[s_old, s_new]."""
    cdef Py_ssize_t p, q, s_old, s_new, in_base, out_base
    cdef int64_t best, cand
    cdef int32_t besta
    for p in range(pre):
        for q in range(post):
            in_base = p * r_old * post + q
            out_base = p * r_new * post + q
            for s_new in range(r_new):
                best = vals[in_base] + m[0, s_new]
                besta = 0
                for s_old in range(1, r_old):
                    cand = vals[in_base + s_old * post] + m[s_old, s_new]
                    if cand > best:
                        best = cand
                        besta = <int32_t> s_old
                out[out_base + s_new * post] = best
                arg[out_base + s_new * post] = besta
