"""Per-concept learning cost: weighted novelty, difficulty and fan-out."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph_store import ConceptGraph, StudentState


@dataclass(frozen=True)
class CostParams:
    lambda1: float = 1 / 3  # novelty
    lambda2: float = 1 / 3  # difficulty
    lambda3: float = 1 / 3  # fan-out

    def __post_init__(self):
        lams = (self.lambda1, self.lambda2, self.lambda3)
        if any(not math.isfinite(x) or x < 0 for x in lams):
            raise ValueError(f"cost weights must be finite and non-negative, got {lams}")
        if sum(lams) <= 0:
            raise ValueError("at least one cost weight must be positive")

    @classmethod
    def parse(cls, text: str) -> "CostParams":
        parts = [float(x) for x in text.split(",")]
        if len(parts) != 3:
            raise ValueError("expected three comma-separated weights")
        return cls(*parts)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.lambda1, self.lambda2, self.lambda3)


@dataclass(frozen=True)
class CostTable:
    graph_id: str
    student_id: str
    params: CostParams
    cost: Mapping[str, float]
    novelty: Mapping[str, float] = field(repr=False)
    difficulty: Mapping[str, float] = field(repr=False)
    fanout: Mapping[str, float] = field(repr=False)
    sources: frozenset[str] = frozenset()

    def __getitem__(self, cid: str) -> float:
        return self.cost[cid]

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "student_id": self.student_id,
            "params": dict(zip(("lambda1", "lambda2", "lambda3"), self.params.as_tuple())),
            "sources": sorted(self.sources),
            "cost": dict(self.cost),
            "novelty": dict(self.novelty),
            "difficulty": dict(self.difficulty),
            "fanout": dict(self.fanout),
        }


def minmax_normalize(values: Mapping) -> dict:
    """Affine map onto [0, 1]. A constant map normalizes to all zeros."""
    if not values:
        raise ValueError("cannot normalize an empty map")
    for k, x in values.items():
        if not math.isfinite(x):
            raise ValueError(f"non-finite value at {k!r}: {x}")
    lo, hi = min(values.values()), max(values.values())
    if hi == lo:
        return {k: 0.0 for k in values}
    span = hi - lo
    return {k: (x - lo) / span for k, x in values.items()}


def difficulty_proxy(g: ConceptGraph, v: str) -> float:
    """Mean difficulty of problems testing ``v``, else the concept's level (raw)."""
    g.require(v)
    pids = g.problems_by_concept[v]
    if not pids:
        return float(g.concepts[v].level)
    return sum(g.problems[p].difficulty for p in pids) / len(pids)


def normalized_difficulty(g: ConceptGraph) -> dict[str, float]:
    # problem-backed and level-backed concepts are on different scales, so each
    # group is normalized on its own before they are combined
    with_problems = {v: difficulty_proxy(g, v) for v in g.ids if g.problems_by_concept[v]}
    by_level = {v: float(g.concepts[v].level) for v in g.ids}
    out = minmax_normalize(by_level) if by_level else {}
    if with_problems:
        out.update(minmax_normalize(with_problems))
    return out


def build_cost_table(g: ConceptGraph, s: StudentState, p: CostParams | None = None,
                     sources: Iterable[str] = ()) -> CostTable:
    p = p or CostParams()
    sources = frozenset(sources)
    for v in sources:
        g.require(v)
    if not len(g):
        return CostTable(g.graph_id, s.student_id, p, {}, {}, {}, {}, sources)

    novelty = {v: 1.0 - s.of(v) for v in g.ids}
    difficulty = normalized_difficulty(g)
    fanout = minmax_normalize({v: float(len(g.out_neighbors[v])) for v in g.ids})
    l1, l2, l3 = p.as_tuple()
    cost = {}
    for v in g.ids:
        if v in sources:
            cost[v] = 0.0
        else:
            cost[v] = l1 * novelty[v] + l2 * difficulty[v] + l3 * fanout[v]
    return CostTable(g.graph_id, s.student_id, p, cost, novelty, difficulty, fanout, sources)
