# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Semantics mirror ``_pycore`` exactly."""
import numpy as np

from libc.math cimport INFINITY


def levenshtein(a, b):
    cdef long[::1] x = np.ascontiguousarray(a, dtype=np.int_)
    cdef long[::1] y = np.ascontiguousarray(b, dtype=np.int_)
    cdef Py_ssize_t n = x.shape[0], m = y.shape[0], i, j
    if n < m:
        x, y = y, x
        n, m = m, n
    if m == 0:
        return n
    cdef long[::1] prev = np.arange(m + 1, dtype=np.int_)
    cdef long[::1] cur = np.empty(m + 1, dtype=np.int_)
    cdef long sub, ins, dele, best
    cdef long xi
    for i in range(1, n + 1):
        cur[0] = i
        xi = x[i - 1]
        for j in range(1, m + 1):
            sub = prev[j - 1] + (xi != y[j - 1])
            ins = cur[j - 1] + 1
            dele = prev[j] + 1
            best = sub
            if ins < best:
                best = ins
            if dele < best:
                best = dele
            cur[j] = best
        prev, cur = cur, prev
    return int(prev[m])


cdef bint _lex_less(long[:, ::1] pred, Py_ssize_t h, long u, long w,
                    long[::1] bu, long[::1] bw):
    cdef Py_ssize_t k
    if u == w:
        return False
    for k in range(h, -1, -1):
        bu[k] = u
        bw[k] = w
        u = pred[k, u]
        w = pred[k, w]
    for k in range(h + 1):
        if bu[k] != bw[k]:
            return bu[k] < bw[k]
    return False


def hop_bounded_path(indptr, indices, cost, long src, long dst, long max_hops):
    cdef long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int_)
    cdef long[::1] ix = np.ascontiguousarray(indices, dtype=np.int_)
    cdef double[::1] c = np.ascontiguousarray(cost, dtype=np.float64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef double[:, ::1] dist = np.full((max_hops + 1, n), np.inf)
    cdef long[:, ::1] pred = np.full((max_hops + 1, n), -1, dtype=np.int_)
    cdef long[::1] bu = np.empty(max_hops + 1, dtype=np.int_)
    cdef long[::1] bw = np.empty(max_hops + 1, dtype=np.int_)
    cdef Py_ssize_t h, u, k, v
    cdef double cu, cand, best_cost = INFINITY
    cdef long best_h = -1
    cdef bint live

    dist[0, src] = 0.0 + c[src]
    if src == dst:
        best_h = 0
        best_cost = dist[0, src]

    for h in range(1, max_hops + 1):
        live = False
        for u in range(n):
            cu = dist[h - 1, u]
            if cu == INFINITY:
                continue
            for k in range(ip[u], ip[u + 1]):
                v = ix[k]
                cand = cu + c[v]
                if cand < dist[h, v]:
                    dist[h, v] = cand
                    pred[h, v] = u
                    live = True
                elif cand == dist[h, v] and _lex_less(pred, h - 1, u, pred[h, v], bu, bw):
                    pred[h, v] = u
        if not live:
            break
        if dist[h, dst] < best_cost:
            best_cost = dist[h, dst]
            best_h = h

    if best_h < 0:
        return None
    nodes = [0] * (best_h + 1)
    v = dst
    for k in range(best_h, -1, -1):
        nodes[k] = v
        v = pred[k, v]
    return nodes, best_cost
