"""Pure-Python versions of the compiled kernels in ``_core.pyx``.

Both modules expose the same functions with the same semantics; results
must agree exactly (the test suite checks this when the extension is built).
"""
from __future__ import annotations

import math

INF = math.inf


def levenshtein(a, b) -> int:
    """Edit distance between two integer sequences (unit costs)."""
    n, m = len(a), len(b)
    if n < m:
        a, b, n, m = b, a, m, n
    if m == 0:
        return n
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ai = a[i - 1]
        for j in range(1, m + 1):
            sub = prev[j - 1] + (ai != b[j - 1])
            ins = cur[j - 1] + 1
            dele = prev[j] + 1
            cur[j] = min(sub, ins, dele)
        prev = cur
    return prev[m]


def _prefix(pred, h, v):
    seq = [0] * (h + 1)
    for k in range(h, -1, -1):
        seq[k] = v
        v = pred[k][v]
    return seq


def _lex_less(pred, h, u, w) -> bool:
    """Is the layer-h prefix ending at u lexicographically below the one ending at w?"""
    if u == w:
        return False
    return _prefix(pred, h, u) < _prefix(pred, h, w)


def hop_bounded_path(indptr, indices, cost, src: int, dst: int, max_hops: int):
    """Minimum node-cost walk ``src -> dst`` with at most ``max_hops`` edges.

    Nodes are integers whose order is the tie-break order. The walk cost sums
    ``cost`` over every node, left to right. Ties go to fewer nodes, then to
    the lexicographically smaller node sequence. On an acyclic graph every
    walk is a simple path.

    Returns ``(nodes, total)`` or ``None`` when ``dst`` is out of reach.
    """
    n = len(indptr) - 1
    layers = [[INF] * n]
    pred = [[-1] * n]
    layers[0][src] = 0.0 + cost[src]
    best_h = 0 if src == dst else -1
    best_cost = layers[0][src] if src == dst else INF

    for h in range(1, max_hops + 1):
        prev = layers[h - 1]
        cur = [INF] * n
        cur_pred = [-1] * n
        pred.append(cur_pred)
        live = False
        for u in range(n):
            cu = prev[u]
            if cu == INF:
                continue
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                cand = cu + cost[v]
                if cand < cur[v]:
                    cur[v] = cand
                    cur_pred[v] = u
                    live = True
                elif cand == cur[v] and _lex_less(pred, h - 1, u, cur_pred[v]):
                    cur_pred[v] = u
        layers.append(cur)
        if not live:
            break
        if cur[dst] < best_cost:
            best_cost = cur[dst]
            best_h = h

    if best_h < 0:
        return None
    return _prefix(pred, best_h, dst), best_cost
