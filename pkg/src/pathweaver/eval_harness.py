"""Blinded-vs-oracle evaluation of planners over simulated cohorts."""
from __future__ import annotations

import csv
import json
import math
import random
import statistics
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

from scipy import stats

from .cost_model import CostParams, CostTable, build_cost_table
from .graph_store import ConceptGraph, StudentState, classify, load_graph_file
from .pathsim import SimWeights, plan_similarity
from .planner import (
    ConceptPath,
    LearningPlan,
    PlannerConfig,
    assemble_plan,
    coverage,
    min_cost_path,
    partition_weak,
    path_cost,
    plan_with_sets,
)
from .retrieval import RetrievalConfig, get_providers
from .student_sim import (
    AttemptRecord,
    DiagnosisConfig,
    RetrievalContext,
    StudentProfile,
    diagnosis_metrics,
    generate_cohort,
    replay,
    simulate_attempts,
    true_weak_concepts,
)

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_KG = DATA_DIR / "physics_kg.json"

METHODS = ("msms", "shortest_per_sink", "no_fanout", "bi_encoder_only", "random")
CSV_COLUMNS = ("method", "pathsim_mean", "pathsim_ci95", "coverage_mean", "cost_mean", "cost_ci95", "p_vs_msms")


class ExperimentError(RuntimeError):
    def __init__(self, seed, profile, method, cause: Exception):
        super().__init__(f"seed={seed} profile={profile} method={method}: {cause!r}")
        self.coordinate = (seed, profile, method)


@dataclass
class ExperimentConfig:
    kg_path: Path = DEFAULT_KG
    cohort_size: int = 15
    steps: int = 15
    seeds: tuple[int, ...] = (0, 1, 2, 3, 4)
    methods: tuple[str, ...] = METHODS
    planner: PlannerConfig = field(default_factory=PlannerConfig)
    cost: CostParams = field(default_factory=CostParams)
    retrieval: RetrievalConfig = field(default_factory=RetrievalConfig)
    diagnosis: DiagnosisConfig = field(default_factory=DiagnosisConfig)
    weights: SimWeights = field(default_factory=SimWeights)
    provider: str = "mock"

    def __post_init__(self):
        self.kg_path = Path(self.kg_path)
        self.seeds = tuple(int(s) for s in self.seeds)
        self.methods = tuple(self.methods)
        if not self.seeds:
            raise ValueError("at least one seed is required")
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ValueError(f"unknown methods {unknown}; registered: {list(METHODS)}")

    @classmethod
    def from_dict(cls, doc: dict, base_dir: Path | None = None) -> "ExperimentConfig":
        doc = dict(doc)
        kw = {}
        if "kg" in doc:
            kg = Path(doc["kg"])
            if not kg.is_absolute() and base_dir is not None:
                kg = base_dir / kg
            kw["kg_path"] = kg
        for key in ("cohort_size", "steps", "provider"):
            if key in doc:
                kw[key] = doc[key]
        for key in ("seeds", "methods"):
            if key in doc:
                kw[key] = tuple(doc[key])
        if "planner" in doc:
            kw["planner"] = PlannerConfig(**doc["planner"])
        if "cost" in doc:
            c = doc["cost"]
            kw["cost"] = CostParams(*c) if isinstance(c, list) else CostParams(**c)
        if "retrieval" in doc:
            kw["retrieval"] = RetrievalConfig(**doc["retrieval"])
        if "diagnosis" in doc:
            kw["diagnosis"] = DiagnosisConfig(**doc["diagnosis"])
        if "weights" in doc:
            kw["weights"] = SimWeights(**doc["weights"])
        return cls(**kw)

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        path = Path(path)
        return cls.from_dict(json.loads(path.read_text(encoding="utf-8")), base_dir=path.parent)

    def to_dict(self) -> dict:
        return {
            "kg": str(self.kg_path),
            "cohort_size": self.cohort_size,
            "steps": self.steps,
            "seeds": list(self.seeds),
            "methods": list(self.methods),
            "planner": asdict(self.planner),
            "cost": asdict(self.cost),
            "retrieval": asdict(self.retrieval),
            "diagnosis": asdict(self.diagnosis),
            "weights": asdict(self.weights),
            "provider": self.provider,
        }


@dataclass
class MetricRow:
    method: str
    pathsim_mean: float
    pathsim_ci95: float
    coverage_mean: float
    cost_mean: float
    cost_ci95: float
    p_vs_msms: float | None = None
    pathsim_scores: list[float] = field(default_factory=list, repr=False)
    coverage_scores: list[float] = field(default_factory=list, repr=False)
    cost_scores: list[float] = field(default_factory=list, repr=False)

    def csv_row(self) -> list[str]:
        p = "" if self.p_vs_msms is None else f"{self.p_vs_msms:.6f}"
        return [self.method, f"{self.pathsim_mean:.6f}", f"{self.pathsim_ci95:.6f}",
                f"{self.coverage_mean:.6f}", f"{self.cost_mean:.6f}", f"{self.cost_ci95:.6f}", p]


# -- per-profile pipelines ---------------------------------------------------

def _context(cfg: ExperimentConfig, alpha: float | None = None) -> RetrievalContext:
    emb, ce = get_providers(cfg.provider)
    rcfg = cfg.retrieval if alpha is None else replace(cfg.retrieval, alpha=alpha)
    return RetrievalContext(emb, ce, rcfg)


def _attempts(profile: StudentProfile, g: ConceptGraph, cfg: ExperimentConfig,
              attempts: Sequence[AttemptRecord] | None) -> Sequence[AttemptRecord]:
    if attempts is None:
        attempts = simulate_attempts(profile, g, cfg.steps, profile.seed, cfg.diagnosis)
    return attempts


def diagnosed_state(profile: StudentProfile, g: ConceptGraph, cfg: ExperimentConfig,
                    attempts: Sequence[AttemptRecord] | None = None, blinded: bool = False,
                    ctx: RetrievalContext | None = None) -> StudentState:
    attempts = _attempts(profile, g, cfg, attempts)
    if blinded and ctx is None:
        ctx = _context(cfg)
    state, _ = replay(profile, attempts, g, blinded, ctx, cfg.diagnosis)
    return state


def _msms(g: ConceptGraph, state: StudentState, cfg: ExperimentConfig,
          params: CostParams | None = None) -> LearningPlan:
    sources, weak = classify(g, state, cfg.planner.mastered_threshold, cfg.planner.weak_threshold)
    ct = build_cost_table(g, state, params or cfg.cost, sources)
    return plan_with_sets(g, ct, sources, weak, cfg.planner)


def oracle_plan(profile: StudentProfile, g: ConceptGraph, cfg: ExperimentConfig | None = None,
                attempts: Sequence[AttemptRecord] | None = None) -> LearningPlan:
    """Reference plan: annotated diagnosis followed by the MSMS planner."""
    cfg = cfg or ExperimentConfig()
    return _msms(g, diagnosed_state(profile, g, cfg, attempts), cfg)


def blinded_plan(profile: StudentProfile, g: ConceptGraph, cfg: ExperimentConfig | None = None,
                 attempts: Sequence[AttemptRecord] | None = None,
                 ctx: RetrievalContext | None = None) -> LearningPlan:
    cfg = cfg or ExperimentConfig()
    return _msms(g, diagnosed_state(profile, g, cfg, attempts, blinded=True, ctx=ctx), cfg)


def shortest_per_sink(g: ConceptGraph, ct: CostTable, sources: Iterable[str], weak: Iterable[str],
                      cfg: PlannerConfig) -> LearningPlan:
    """One cheapest path per dependent sink, all kept; no shared-node reuse."""
    sources = sorted(sources)
    ind, dep = partition_weak(g, weak)
    paths = []
    for w in sorted(dep):
        found = [p for s in sources if (p := min_cost_path(g, ct, s, w, cfg.max_path_len)) is not None]
        if found:
            paths.append(min(found, key=lambda p: (p.cost, len(p.nodes), p.nodes)))
    return assemble_plan(paths, ind, set(weak), sources, ct)


def _path_counts(g: ConceptGraph, s: str, max_len: int) -> list[dict[str, int]]:
    counts = [{s: 1}]
    for _ in range(max_len):
        nxt: dict[str, int] = {}
        for u, c in counts[-1].items():
            for v in g.out_neighbors[u]:
                nxt[v] = nxt.get(v, 0) + c
        if not nxt:
            break
        counts.append(nxt)
    return counts


def random_path(g: ConceptGraph, sources: Iterable[str], w: str, max_len: int,
                rng: random.Random) -> ConceptPath | None:
    """A uniformly random prerequisite path to ``w`` from a random source that reaches it."""
    options = []
    for s in sorted(sources):
        counts = _path_counts(g, s, max_len)
        total = sum(layer.get(w, 0) for layer in counts)
        if total:
            options.append((s, counts, total))
    if not options:
        return None
    s, counts, total = options[rng.randrange(len(options))]
    pick = rng.randrange(total)
    for h, layer in enumerate(counts):
        n = layer.get(w, 0)
        if pick < n:
            break
        pick -= n
    nodes = [w]
    v = w
    for k in range(h, 0, -1):
        preds = [(u, counts[k - 1][u]) for u in g.in_neighbors[v] if u in counts[k - 1]]
        pick = rng.randrange(sum(c for _, c in preds))
        for u, c in preds:
            if pick < c:
                break
            pick -= c
        nodes.append(u)
        v = u
    nodes.reverse()
    return ConceptPath(tuple(nodes))


def random_plan(g: ConceptGraph, ct: CostTable, sources: Iterable[str], weak: Iterable[str],
                cfg: PlannerConfig, rng: random.Random) -> LearningPlan:
    """Independents as in MSMS; each dependent sink gets a uniformly random path."""
    sources = sorted(sources)
    ind, dep = partition_weak(g, weak)
    paths = []
    for w in sorted(dep):
        p = random_path(g, sources, w, cfg.max_path_len, rng)
        if p is not None:
            paths.append(ConceptPath(p.nodes, path_cost(p.nodes, ct)))
    return assemble_plan(paths, ind, set(weak), sources, ct)


def baseline_plan(name: str, profile: StudentProfile, g: ConceptGraph, cfg: ExperimentConfig | None = None,
                  attempts: Sequence[AttemptRecord] | None = None, seed: int = 0,
                  state: StudentState | None = None) -> LearningPlan:
    """Plan for a registered method. ``state`` is the shared blinded diagnosis when supplied."""
    cfg = cfg or ExperimentConfig()
    if name not in METHODS:
        raise ValueError(f"unknown baseline {name!r}; registered: {list(METHODS)}")
    attempts = _attempts(profile, g, cfg, attempts)
    if name == "bi_encoder_only":
        bstate = diagnosed_state(profile, g, cfg, attempts, blinded=True, ctx=_context(cfg, alpha=1.0))
        return _msms(g, bstate, cfg)
    if state is None:
        state = diagnosed_state(profile, g, cfg, attempts, blinded=True)
    if name == "msms":
        return _msms(g, state, cfg)
    if name == "no_fanout":
        return _msms(g, state, cfg, replace(cfg.cost, lambda3=0.0))
    sources, weak = classify(g, state, cfg.planner.mastered_threshold, cfg.planner.weak_threshold)
    ct = build_cost_table(g, state, cfg.cost, sources)
    if name == "shortest_per_sink":
        return shortest_per_sink(g, ct, sources, weak, cfg.planner)
    return random_plan(g, ct, sources, weak, cfg.planner, random.Random(seed))


def reachable_weak(g: ConceptGraph, state: StudentState, cfg: ExperimentConfig) -> set[str]:
    """Weak concepts a plan can address: independents plus sinks some source reaches."""
    sources, weak = classify(g, state, cfg.planner.mastered_threshold, cfg.planner.weak_threshold)
    return reachable_targets(g, sources, weak, cfg.planner.max_path_len)


def reachable_targets(g: ConceptGraph, sources: Iterable[str], weak: Iterable[str], max_len: int) -> set[str]:
    ind, dep = partition_weak(g, weak)
    out = set(ind)
    reached: set[str] = set()
    for s in sources:
        for layer in _path_counts(g, s, max_len):
            reached.update(layer)
    return out | (dep & reached)


# -- aggregation ---------------------------------------------------------------

def ci95(values: Sequence[float]) -> float:
    """Half-width of a Student-t 95% interval for the mean."""
    n = len(values)
    if n < 2:
        return 0.0
    sd = statistics.stdev(values)
    return float(stats.t.ppf(0.975, n - 1) * sd / math.sqrt(n))


def sign_test(a: Sequence[float], b: Sequence[float]) -> float:
    """Exact two-sided paired sign test; ties are dropped."""
    wins = sum(x > y for x, y in zip(a, b))
    losses = sum(x < y for x, y in zip(a, b))
    n = wins + losses
    if n == 0:
        return 1.0
    return float(stats.binomtest(wins, n, 0.5, alternative="two-sided").pvalue)


def _mean(xs: Sequence[float]) -> float:
    return math.fsum(xs) / len(xs) if xs else float("nan")


def aggregate(cells: list[dict], methods: Sequence[str]) -> list[MetricRow]:
    rows = []
    per_profile: dict[str, dict[int, list[float]]] = {}
    for m in methods:
        mine = [c for c in cells if c["method"] == m]
        ps = [c["pathsim"] for c in mine]
        cov = [c["coverage"] for c in mine]
        cost = [float(c["cost"]) for c in mine]
        rows.append(MetricRow(m, _mean(ps), ci95(ps), _mean(cov), _mean(cost), ci95(cost),
                              pathsim_scores=ps, coverage_scores=cov, cost_scores=cost))
        by_prof: dict[int, list[float]] = {}
        for c in mine:
            by_prof.setdefault(c["profile"], []).append(c["pathsim"])
        per_profile[m] = by_prof
    if "msms" in per_profile:
        ref = per_profile["msms"]
        profiles = sorted(ref)
        a = [_mean(ref[i]) for i in profiles]
        for row in rows:
            if row.method == "msms":
                continue
            other = per_profile[row.method]
            row.p_vs_msms = sign_test(a, [_mean(other[i]) for i in profiles])
    return rows


# -- experiment ----------------------------------------------------------------

def run_cells(cfg: ExperimentConfig, g: ConceptGraph | None = None) -> list[dict]:
    g = g or load_graph_file(cfg.kg_path)
    ctx = _context(cfg)
    cells = []
    for seed in cfg.seeds:
        cohort = generate_cohort(g, cfg.cohort_size, seed)
        for i, profile in enumerate(cohort):
            try:
                attempts = simulate_attempts(profile, g, cfg.steps, profile.seed, cfg.diagnosis)
                or_state = diagnosed_state(profile, g, cfg, attempts)
                bl_state = diagnosed_state(profile, g, cfg, attempts, blinded=True, ctx=ctx)
                reference = _msms(g, or_state, cfg)
                _, or_weak = classify(g, or_state, cfg.planner.mastered_threshold, cfg.planner.weak_threshold)
                reach = reachable_weak(g, or_state, cfg)
            except Exception as exc:
                raise ExperimentError(seed, profile.student_id, "oracle", exc) from exc
            for method in cfg.methods:
                try:
                    p = baseline_plan(method, profile, g, cfg, attempts,
                                      seed=seed * 1_000_003 + i, state=bl_state)
                    on_plan = p.concepts()
                    targets = reachable_targets(g, p.sources, p.covered | p.uncovered | p.independents,
                                                cfg.planner.max_path_len)
                    cells.append({
                        "seed": seed,
                        "profile": i,
                        "student_id": profile.student_id,
                        "method": method,
                        "pathsim": plan_similarity(p, reference, cfg.weights).total,
                        "coverage": coverage(p, or_weak),
                        "coverage_reachable": (len(on_plan & reach) / len(reach)) if reach else 1.0,
                        "coverage_targets": (len(on_plan & targets) / len(targets)) if targets else 1.0,
                        "cost": p.unique_new_concepts,
                        "total_cost": p.total_cost,
                        "n_weak_oracle": len(or_weak),
                    })
                except Exception as exc:
                    raise ExperimentError(seed, profile.student_id, method, exc) from exc
    return cells


def run_experiment(cfg: ExperimentConfig, out_dir: Path | str | None = None,
                   g: ConceptGraph | None = None) -> list[MetricRow]:
    cells = run_cells(cfg, g)
    rows = aggregate(cells, cfg.methods)
    if out_dir is not None:
        write_report(rows, cells, cfg, Path(out_dir))
    return rows


def write_report(rows: Sequence[MetricRow], cells: list[dict], cfg: ExperimentConfig, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    with (out_dir / "metrics.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in rows:
            w.writerow(row.csv_row())
    raw = {"config": cfg.to_dict(), "cells": cells}
    with (out_dir / "raw.json").open("w", encoding="utf-8") as fh:
        json.dump(raw, fh, indent=1, sort_keys=True)
        fh.write("\n")


# -- diagnosis study -------------------------------------------------------------

def diagnosis_study(cfg: ExperimentConfig, g: ConceptGraph | None = None) -> dict[str, float]:
    """Mean per-attempt F1 of oracle, blinded and uniform-random concept assignment.

    Averages run over incorrect attempts, where the prediction is non-trivial.
    The random baseline guesses as many concepts as blinded mode predicted.
    """
    g = g or load_graph_file(cfg.kg_path)
    ctx = _context(cfg)
    f1 = {"oracle": [], "blinded": [], "random": []}
    for seed in cfg.seeds:
        rng = random.Random(seed)
        for profile in generate_cohort(g, cfg.cohort_size, seed):
            attempts = simulate_attempts(profile, g, cfg.steps, profile.seed, cfg.diagnosis)
            _, oracle = replay(profile, attempts, g, False, None, cfg.diagnosis)
            _, blind = replay(profile, attempts, g, True, ctx, cfg.diagnosis)
            for a, o, b in zip(attempts, oracle, blind):
                if a.correct:
                    continue
                truth = true_weak_concepts(a, g)
                guess = rng.sample(g.ids, min(len(g.ids), max(1, len(b.weak_concepts))))
                f1["oracle"].append(diagnosis_metrics(o.weak_concepts, truth)[2])
                f1["blinded"].append(diagnosis_metrics(b.weak_concepts, truth)[2])
                f1["random"].append(diagnosis_metrics(guess, truth)[2])
    return {k: _mean(v) for k, v in f1.items()} | {"n_attempts": len(f1["oracle"]),
                                                      "oracle_min": min(f1["oracle"], default=1.0)}
