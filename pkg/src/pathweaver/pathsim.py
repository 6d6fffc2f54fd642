"""Topology-aware similarity between two learning plans."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from . import kernels
from .planner import ConceptPath, LearningPlan


@dataclass(frozen=True)
class SimWeights:
    w_p: float = 0.5
    w_i: float = 0.5
    node_w: float = 1 / 3
    edge_w: float = 1 / 3
    seq_w: float = 1 / 3

    def __post_init__(self):
        vals = (self.w_p, self.w_i, self.node_w, self.edge_w, self.seq_w)
        if any(not 0.0 <= x <= 1.0 for x in vals):
            raise ValueError("similarity weights must lie in [0, 1]")
        if abs(self.w_p + self.w_i - 1.0) > 1e-9:
            raise ValueError("w_p + w_i must equal 1")
        if abs(self.node_w + self.edge_w + self.seq_w - 1.0) > 1e-9:
            raise ValueError("node_w + edge_w + seq_w must equal 1")

    @classmethod
    def parse(cls, text: str) -> "SimWeights":
        """``w_p,w_i`` or ``w_p,w_i,node_w,edge_w,seq_w``."""
        vals = [float(x) for x in text.split(",")]
        if len(vals) not in (2, 5):
            raise ValueError("expected 2 or 5 comma-separated weights")
        return cls(*vals)


@dataclass
class PathSimReport:
    sim_p: float
    sim_i: float
    total: float
    matrix: list[list[float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"sim_p": self.sim_p, "sim_i": self.sim_i, "total_sim": self.total, "matrix": self.matrix}


def jaccard(a: Iterable[Hashable], b: Iterable[Hashable]) -> float:
    a, b = set(a), set(b)
    union = a | b
    if not union:
        return 1.0
    return len(a & b) / len(union)


def normalized_levenshtein(sa: Sequence[Hashable], sb: Sequence[Hashable]) -> float:
    longest = max(len(sa), len(sb))
    if longest == 0:
        return 1.0
    vocab: dict = {}
    ia = [vocab.setdefault(x, len(vocab)) for x in sa]
    ib = [vocab.setdefault(x, len(vocab)) for x in sb]
    return 1.0 - kernels.levenshtein(ia, ib) / longest


def _nodes(p) -> tuple:
    return tuple(p.nodes) if isinstance(p, ConceptPath) else tuple(p)


def path_pair_sim(pa, pb, w: SimWeights | None = None) -> float:
    w = w or SimWeights()
    na, nb = _nodes(pa), _nodes(pb)
    if na == nb:
        return 1.0
    node = jaccard(na, nb)
    edge = jaccard(zip(na, na[1:]), zip(nb, nb[1:]))
    seq = normalized_levenshtein(na, nb)
    return min(1.0, w.node_w * node + w.edge_w * edge + w.seq_w * seq)


def plan_similarity(plan_a: LearningPlan, plan_b: LearningPlan, w: SimWeights | None = None) -> PathSimReport:
    w = w or SimWeights()
    sim_i = jaccard(plan_a.independents, plan_b.independents)
    pa, pb = plan_a.paths, plan_b.paths
    matrix: list[list[float]] = []
    if not pa and not pb:
        sim_p = 1.0
    elif not pa or not pb:
        sim_p = 0.0
    else:
        matrix = [[path_pair_sim(x, y, w) for y in pb] for x in pa]
        a_to_b = sum(max(row) for row in matrix) / len(pa)
        b_to_a = sum(max(matrix[i][j] for i in range(len(pa))) for j in range(len(pb))) / len(pb)
        sim_p = (a_to_b + b_to_a) / 2
    total = 1.0 if sim_p == sim_i == 1.0 else min(1.0, w.w_p * sim_p + w.w_i * sim_i)
    return PathSimReport(sim_p=sim_p, sim_i=sim_i, total=total, matrix=matrix)
