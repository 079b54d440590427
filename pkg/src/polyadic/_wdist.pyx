# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled odometer enumeration of full weight distributions.

Same contract as the numpy fallback in enumeration.py: messages are walked
in lexicographic order over the packed-value field order, the running
codeword is updated incrementally via precomputed delta rows, and the
complete Hamming-weight histogram is returned.
"""

import numpy as np


def weight_distribution(int[:, ::1] add, int[:, :, ::1] delta,
                        int n, int k, int q, long long total):
    """Weight histogram over all `total` = q**k messages.

    add:   (q, q) field addition table on packed values
    delta: (k, q, n) row to add when digit i steps j -> j+1 (mod q)
    """
    cdef long long[::1] dist = np.zeros(n + 1, dtype=np.int64)
    cdef int[::1] c = np.zeros(n, dtype=np.int32)
    cdef int[::1] dig = np.zeros(k, dtype=np.int32)
    cdef int w = 0
    cdef int i, j, col, v_old, v_new
    cdef long long step

    dist[0] += 1
    for step in range(total - 1):
        i = k - 1
        while True:
            j = dig[i]
            for col in range(n):
                v_old = c[col]
                v_new = add[v_old, delta[i, j, col]]
                c[col] = v_new
                w += (v_new != 0) - (v_old != 0)
            if j + 1 < q:
                dig[i] = j + 1
                break
            dig[i] = 0
            i -= 1
        dist[w] += 1
    return np.asarray(dist)
