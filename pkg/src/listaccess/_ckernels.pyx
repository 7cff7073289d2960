# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled serving kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MTF = 0
    TRANSPOSE = 1
    FREQUENCY_COUNT = 2


cdef int _serve(int* order, long* counts, int l, const int* req, Py_ssize_t n,
                int algo, long* pos_out) noexcept nogil:
    cdef Py_ssize_t t
    cdef int i, j, r
    cdef long c
    for t in range(n):
        r = req[t]
        i = 0
        while i < l and order[i] != r:
            i += 1
        if i == l:
            return -1
        pos_out[t] = i + 1
        if algo == MTF:
            j = i
            while j > 0:
                order[j] = order[j - 1]
                j -= 1
            order[0] = r
        elif algo == TRANSPOSE:
            if i > 0:
                order[i] = order[i - 1]
                order[i - 1] = r
        else:
            counts[r] += 1
            c = counts[r]
            j = i
            while j > 0 and counts[order[j - 1]] < c:
                order[j] = order[j - 1]
                j -= 1
            order[j] = r
    return 0


cdef _run(order, requests, int algo, bint want_positions):
    cdef int l = len(order)
    cdef Py_ssize_t n = len(requests)
    cdef Py_ssize_t t
    cdef int k, rc
    cdef long total = 0
    if algo < 0 or algo > 2:
        raise ValueError(f"unknown algorithm code {algo}")
    cdef int* o = <int*>malloc(max(l, 1) * sizeof(int))
    cdef long* counts = <long*>malloc(max(l, 1) * sizeof(long))
    cdef int* req = <int*>malloc(max(n, 1) * sizeof(int))
    cdef long* pos = <long*>malloc(max(n, 1) * sizeof(long))
    if not o or not counts or not req or not pos:
        free(o); free(counts); free(req); free(pos)
        raise MemoryError()
    try:
        for k in range(l):
            o[k] = order[k]
            counts[k] = 0
        for t in range(n):
            k = requests[t]
            if k < 0 or k >= l:
                raise ValueError(f"request {k} at index {t} is not a list index")
            req[t] = k
        with nogil:
            rc = _serve(o, counts, l, req, n, algo, pos)
        if rc != 0:
            raise ValueError("request not found in list")
        final = [o[k] for k in range(l)]
        if want_positions:
            return [pos[t] for t in range(n)], final
        for t in range(n):
            total += pos[t]
        return total, final
    finally:
        free(o); free(counts); free(req); free(pos)


def serve_positions(order, requests, int algo):
    """Serve ``requests`` on ``order``; return (positions, final_order)."""
    return _run(order, requests, algo, True)


def total_positions(order, requests, int algo):
    """Sum of 1-indexed access positions (the Full Cost Model total)."""
    return _run(order, requests, algo, False)[0]
