"""Independent reference implementations used as test oracles."""
from __future__ import annotations

import itertools
import math
import random

from pathweaver.graph_store import Concept, ConceptGraph


def make_graph(ids, edges, problems=(), misconceptions=(), levels=None) -> ConceptGraph:
    levels = levels or {}
    return ConceptGraph([Concept(c, c.upper(), levels.get(c, 0)) for c in ids], edges,
                        problems, misconceptions)


def random_dag(rng: random.Random, n: int, p: float = 0.3, prefix: str = "n") -> ConceptGraph:
    """DAG on ``n`` nodes whose topological order is a random shuffle of the sorted ids."""
    ids = [f"{prefix}{i:02d}" for i in range(n)]
    order = ids[:]
    rng.shuffle(order)
    edges = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return ConceptGraph([Concept(c, c) for c in ids], edges)


def simple_paths(g: ConceptGraph, s: str, w: str, max_len: int):
    """Every directed path ``s -> w`` with at most ``max_len`` edges, by DFS."""
    stack = [(s,)]
    while stack:
        path = stack.pop()
        if path[-1] == w:
            yield path
            continue
        if len(path) - 1 == max_len:
            continue
        for v in g.out_neighbors[path[-1]]:
            if v not in path:
                stack.append(path + (v,))


def summed(nodes, cost) -> float:
    total = 0.0
    for v in nodes:
        total += cost[v]
    return total


def brute_min_path(g: ConceptGraph, cost, s: str, w: str, max_len: int):
    best = None
    for p in simple_paths(g, s, w, max_len):
        key = (summed(p, cost), len(p), p)
        if best is None or key < best:
            best = key
    return None if best is None else (best[2], best[0])


def union_cost(paths, cost) -> float:
    nodes = set()
    for p in paths:
        nodes.update(p)
    return sum(cost[v] for v in nodes)


def brute_cover(candidates, sinks, cost):
    """Cheapest union-cost subset of ``candidates`` covering every coverable sink."""
    sinks = set(sinks)
    coverable = set()
    for p in candidates:
        coverable |= sinks.intersection(p)
    best = None
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            hit = set()
            for p in combo:
                hit |= sinks.intersection(p)
            if hit == coverable:
                c = union_cost(combo, cost)
                if best is None or c < best[0]:
                    best = (c, combo)
    return best


def brute_node_opt(g: ConceptGraph, cost, sources, targets, max_len: int = 10) -> float:
    """Cheapest node set holding the sources from which every target is reachable within ``max_len`` hops.

    This is the optimum over all path systems, not only over a candidate list.
    """
    sources = set(sources)
    targets = set(targets)
    others = [v for v in g.ids if v not in sources]
    best = math.inf
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            keep = sources | set(combo)
            if not targets <= keep:
                continue
            c = sum(cost[v] for v in keep)
            if c >= best:
                continue
            hops = {s: 0 for s in sources}
            frontier = list(sources)
            while frontier:
                nxt = []
                for u in frontier:
                    if hops[u] == max_len:
                        continue
                    for v in g.out_neighbors[u]:
                        if v in keep and v not in hops:
                            hops[v] = hops[u] + 1
                            nxt.append(v)
                frontier = nxt
            if targets <= hops.keys():
                best = c
    return best


def edit_distance(a, b) -> int:
    """Textbook full-table Levenshtein."""
    d = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a) + 1):
        d[i][0] = i
    for j in range(len(b) + 1):
        d[0][j] = j
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] != b[j - 1]))
    return d[len(a)][len(b)]


def random_path(g: ConceptGraph, rng: random.Random, max_len: int = 6) -> tuple[str, ...]:
    v = rng.choice(g.ids)
    nodes = [v]
    while len(nodes) <= max_len and g.out_neighbors[v] and rng.random() < 0.8:
        v = rng.choice(g.out_neighbors[v])
        nodes.append(v)
    return tuple(nodes)
