"""Multi-source multi-sink planning: cover weak concepts with cheap source->sink paths."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import kernels
from .cost_model import CostParams, CostTable, build_cost_table
from .graph_store import MASTERED_THRESHOLD, WEAK_THRESHOLD, ConceptGraph, StudentState, classify


@dataclass(frozen=True)
class ConceptPath:
    nodes: tuple[str, ...]
    cost: float = 0.0

    @property
    def source(self) -> str:
        return self.nodes[0]

    @property
    def sink(self) -> str:
        return self.nodes[-1]

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return frozenset(zip(self.nodes, self.nodes[1:]))

    def __len__(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class PlannerConfig:
    max_path_len: int = 10
    mastered_threshold: float = MASTERED_THRESHOLD
    weak_threshold: float = WEAK_THRESHOLD

    def __post_init__(self):
        if self.max_path_len < 1:
            raise ValueError("max_path_len must be at least 1")
        if not self.weak_threshold <= self.mastered_threshold:
            raise ValueError("weak threshold must not exceed mastered threshold")


@dataclass
class LearningPlan:
    paths: list[ConceptPath] = field(default_factory=list)
    independents: frozenset[str] = frozenset()
    covered: frozenset[str] = frozenset()
    uncovered: frozenset[str] = frozenset()
    total_cost: float = 0.0
    unique_new_concepts: int = 0
    sources: frozenset[str] = frozenset()

    def concepts(self) -> set[str]:
        out = set(self.independents)
        for p in self.paths:
            out.update(p.nodes)
        return out

    def to_dict(self) -> dict:
        return {
            "paths": [{"nodes": list(p.nodes), "cost": p.cost} for p in self.paths],
            "independents": sorted(self.independents),
            "covered": sorted(self.covered),
            "uncovered": sorted(self.uncovered),
            "total_cost": self.total_cost,
            "unique_new_concepts": self.unique_new_concepts,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "LearningPlan":
        return cls(
            paths=[ConceptPath(tuple(p["nodes"]), float(p.get("cost", 0.0))) for p in doc.get("paths", [])],
            independents=frozenset(doc.get("independents", [])),
            covered=frozenset(doc.get("covered", [])),
            uncovered=frozenset(doc.get("uncovered", [])),
            total_cost=float(doc.get("total_cost", 0.0)),
            unique_new_concepts=int(doc.get("unique_new_concepts", 0)),
        )


def path_cost(nodes: Sequence[str], ct: CostTable | Mapping[str, float]) -> float:
    # left-to-right accumulation, identical to the kernels' order
    total = 0.0
    for v in nodes:
        total += ct[v]
    return total


def partition_weak(g: ConceptGraph, weak: Iterable[str]) -> tuple[set[str], set[str]]:
    """Split weak concepts into those without a weak prerequisite and the rest."""
    weak = set(weak)
    for w in weak:
        g.require(w)
    ind = {w for w in weak if not any(u in weak for u in g.in_neighbors[w])}
    return ind, weak - ind


def min_cost_path(g: ConceptGraph, ct: CostTable, s: str, w: str, max_len: int = 10) -> ConceptPath | None:
    """Cheapest prerequisite path ``s -> w`` with at most ``max_len`` edges.

    Cost is the sum of node costs; ties go to fewer nodes, then to the
    lexicographically smaller id sequence.
    """
    g.require(s)
    g.require(w)
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    cost = [ct[v] for v in g.ids]
    found = kernels.hop_bounded_path(g.indptr, g.indices, cost, g.index[s], g.index[w], max_len)
    if found is None:
        return None
    idx, total = found
    return ConceptPath(tuple(g.ids[i] for i in idx), total)


def enumerate_candidates(g: ConceptGraph, ct: CostTable, sources: Iterable[str], sinks: Iterable[str],
                         cfg: PlannerConfig | None = None) -> list[ConceptPath]:
    cfg = cfg or PlannerConfig()
    sources = sorted(sources)
    out = []
    if not sources:
        return out
    cost = [ct[v] for v in g.ids]
    for w in sorted(sinks):
        g.require(w)
        for s in sources:
            g.require(s)
            found = kernels.hop_bounded_path(g.indptr, g.indices, cost, g.index[s], g.index[w],
                                             cfg.max_path_len)
            if found is not None:
                out.append(ConceptPath(tuple(g.ids[i] for i in found[0]), found[1]))
    return out


def greedy_set_cover(candidates: Sequence[ConceptPath], sinks: Iterable[str],
                     ct: CostTable | Mapping[str, float]) -> list[ConceptPath]:
    """Weighted greedy cover of ``sinks`` by candidate paths.

    A candidate covers every sink lying on it. Each round takes the candidate
    with the best (newly covered sinks) / (cost of nodes not yet selected);
    ties go to the lower marginal cost, then the smaller sink id.
    """
    sinks = set(sinks)
    covers = [sinks.intersection(p.nodes) for p in candidates]
    chosen: list[ConceptPath] = []
    used_nodes: set[str] = set()
    covered: set[str] = set()
    taken = [False] * len(candidates)

    while True:
        best_key = None
        best_i = -1
        for i, p in enumerate(candidates):
            if taken[i]:
                continue
            gain = len(covers[i] - covered)
            if gain == 0:
                continue
            marginal = path_cost([v for v in dict.fromkeys(p.nodes) if v not in used_nodes], ct)
            ratio = math.inf if marginal <= 0 else gain / marginal
            key = (-ratio, marginal, p.sink, p.source, p.nodes)
            if best_key is None or key < best_key:
                best_key, best_i = key, i
        if best_i < 0:
            return chosen
        taken[best_i] = True
        p = candidates[best_i]
        chosen.append(p)
        used_nodes.update(p.nodes)
        covered |= covers[best_i]


def union_cost(paths: Iterable[ConceptPath], independents: Iterable[str],
               ct: CostTable | Mapping[str, float]) -> float:
    nodes: set[str] = set(independents)
    for p in paths:
        nodes.update(p.nodes)
    return path_cost(sorted(nodes), ct)


def assemble_plan(paths: Sequence[ConceptPath], independents: Iterable[str], weak: Iterable[str],
                  sources: Iterable[str], ct: CostTable | Mapping[str, float]) -> LearningPlan:
    """Build a LearningPlan with union-based totals from selected paths."""
    weak = set(weak)
    independents = frozenset(independents)
    sources = frozenset(sources)
    on_paths: set[str] = set()
    for p in paths:
        on_paths.update(p.nodes)
    covered = frozenset((on_paths & weak) - independents)
    uncovered = frozenset(weak - covered - independents)
    new_concepts = (on_paths | independents) - sources
    return LearningPlan(
        paths=list(paths),
        independents=independents,
        covered=covered,
        uncovered=uncovered,
        total_cost=union_cost(paths, independents, ct),
        unique_new_concepts=len(new_concepts),
        sources=sources,
    )


def plan_with_sets(g: ConceptGraph, ct: CostTable, sources: Iterable[str], weak: Iterable[str],
                   cfg: PlannerConfig | None = None) -> LearningPlan:
    cfg = cfg or PlannerConfig()
    sources = set(sources)
    ind, dep = partition_weak(g, weak)
    candidates = enumerate_candidates(g, ct, sources, dep, cfg)
    chosen = greedy_set_cover(candidates, dep, ct)
    return assemble_plan(chosen, ind, set(weak), sources, ct)


def plan(g: ConceptGraph, s: StudentState, cfg: PlannerConfig | None = None,
         params: CostParams | None = None, sources: Iterable[str] | None = None,
         weak: Iterable[str] | None = None) -> LearningPlan:
    """Partition, enumerate and cover for one student.

    Sources and weak concepts come from the mastery thresholds unless passed.
    """
    cfg = cfg or PlannerConfig()
    if sources is None or weak is None:
        auto_s, auto_w = classify(g, s, cfg.mastered_threshold, cfg.weak_threshold)
        sources = auto_s if sources is None else sources
        weak = auto_w if weak is None else weak
    sources = set(sources)
    weak = set(weak)
    ct = build_cost_table(g, s, params, sources)
    return plan_with_sets(g, ct, sources, weak, cfg)


def coverage(p: LearningPlan, weak: Iterable[str]) -> float:
    weak = set(weak)
    if not weak:
        return 1.0
    # path membership rather than p.covered, so plans built from a different weak set score fairly
    return len((p.concepts() | set(p.covered)) & weak) / len(weak)
