# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_kernels_py``."""

from libc.stdlib cimport malloc, free


def content_hvector(contents, int bmax):
    cdef list h = [0] * (bmax + 1)
    cdef int k
    cdef object c
    h[0] = 1
    for c in contents:
        if c == 0:
            continue
        for k in range(1, bmax + 1):
            h[k] = h[k] + c * h[k - 1]
    return h


cdef int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _transitive(int d, int b, int* ss, int* ts) nogil:
    cdef int parent[64]
    cdef int i, a, c, comps = d
    for i in range(d):
        parent[i] = i
    for i in range(b):
        a = _find(parent, ss[i])
        c = _find(parent, ts[i])
        if a != c:
            parent[a] = c
            comps -= 1
    return comps == 1


cdef long long _dfs(int depth, int b, int d, int tmin, int* cur, int* target,
                    int* ss, int* ts, bint connected) nogil:
    cdef int s, t, i, tmp
    cdef long long total = 0
    if depth == b:
        for i in range(d):
            if cur[i] != target[i]:
                return 0
        if connected and not _transitive(d, b, ss, ts):
            return 0
        return 1
    for t in range(tmin, d):
        ts[depth] = t
        for s in range(t):
            ss[depth] = s
            tmp = cur[s]; cur[s] = cur[t]; cur[t] = tmp
            total += _dfs(depth + 1, b, d, t, cur, target, ss, ts, connected)
            tmp = cur[s]; cur[s] = cur[t]; cur[t] = tmp
    return total


def count_monotone(int d, int b, target, bint connected):
    if d > 64:
        raise ValueError("degree too large for the compiled kernel")
    cdef int* cur = <int*> malloc(d * sizeof(int))
    cdef int* tgt = <int*> malloc(d * sizeof(int))
    cdef int* ss = <int*> malloc((b + 1) * sizeof(int))
    cdef int* ts = <int*> malloc((b + 1) * sizeof(int))
    cdef int i
    cdef long long total
    try:
        for i in range(d):
            cur[i] = i
            tgt[i] = target[i]
        with nogil:
            total = _dfs(0, b, d, 1, cur, tgt, ss, ts, connected)
    finally:
        free(cur); free(tgt); free(ss); free(ts)
    return total
