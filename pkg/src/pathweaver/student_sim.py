"""Simulated students and rule-based diagnosis over misconception maps."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph_store import ConceptGraph, Problem, StudentState, apply_mastery_update
from .retrieval import (
    CrossEncoder,
    EmbeddingProvider,
    RetrievalConfig,
    blind_link_concepts,
    get_providers,
    misconception_corpus,
    retrieve,
)


@dataclass(frozen=True)
class DiagnosisConfig:
    correct_delta: float = 0.1
    incorrect_delta: float = -0.15
    p_min: float = 0.1
    p_max: float = 0.95
    link_k: int = 1  # concepts linked per problem in blinded mode
    min_misconception_score: float = 0.0  # blinded match needs a raw rerank score above this
    update_during_simulation: bool = True

    def __post_init__(self):
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            raise ValueError("need 0 <= p_min <= p_max <= 1")
        if self.link_k < 1:
            raise ValueError("link_k must be at least 1")


@dataclass(frozen=True)
class StudentProfile:
    student_id: str
    mastery: dict[str, float]
    seed: int

    def state(self) -> StudentState:
        return StudentState(self.student_id, dict(self.mastery))

    def to_dict(self) -> dict:
        return {"student_id": self.student_id, "seed": self.seed, "mastery": dict(self.mastery)}

    @classmethod
    def from_dict(cls, doc) -> "StudentProfile":
        return cls(str(doc["student_id"]), {str(k): float(v) for k, v in doc["mastery"].items()},
                   int(doc["seed"]))


@dataclass(frozen=True)
class AttemptRecord:
    problem_id: str
    chosen_option: str
    correct: bool
    step: int

    def to_dict(self) -> dict:
        return {"problem_id": self.problem_id, "chosen_option": self.chosen_option,
                "correct": self.correct, "step": self.step}

    @classmethod
    def from_dict(cls, doc) -> "AttemptRecord":
        return cls(str(doc["problem_id"]), str(doc["chosen_option"]), bool(doc["correct"]), int(doc["step"]))


@dataclass(frozen=True)
class DiagnosisResult:
    weak_concepts: frozenset[str] = frozenset()
    misconceptions: frozenset[str] = frozenset()
    deltas: dict[str, float] = field(default_factory=dict)


@dataclass
class RetrievalContext:
    """Providers and settings used by blinded diagnosis; memoizes per-problem links."""

    emb: EmbeddingProvider
    ce: CrossEncoder
    cfg: RetrievalConfig = field(default_factory=RetrievalConfig)
    _links: dict = field(default_factory=dict, repr=False)

    @classmethod
    def mock(cls, cfg: RetrievalConfig | None = None) -> "RetrievalContext":
        emb, ce = get_providers("mock")
        return cls(emb, ce, cfg or RetrievalConfig())

    def link(self, p: Problem, g: ConceptGraph, k: int) -> frozenset[str]:
        key = (p.id, k)
        if key not in self._links:
            cfg = RetrievalConfig(self.cfg.alpha, max(self.cfg.k_vector, k), k)
            self._links[key] = frozenset(blind_link_concepts(p.stem, g, self.emb, self.ce, cfg))
        return self._links[key]


def generate_cohort(g: ConceptGraph, n: int, seed: int) -> list[StudentProfile]:
    """``n`` profiles with mastery drawn uniformly from [0, 1] per concept."""
    if n < 1:
        raise ValueError("cohort size must be at least 1")
    rng = random.Random(seed)
    cohort = []
    for i in range(n):
        mastery = {cid: rng.random() for cid in g.ids}
        cohort.append(StudentProfile(f"s{i:02d}", mastery, rng.randrange(2**32)))
    return cohort


def answer_probability(s: StudentState, p: Problem, p_min: float = 0.1, p_max: float = 0.95) -> float:
    if not p.linked_kp_ids:
        raise ValueError(f"problem {p.id} has no linked concepts")
    mean = sum(s.of(c) for c in p.linked_kp_ids) / len(p.linked_kp_ids)
    return p_min + (p_max - p_min) * mean


def _incorrect_options(p: Problem) -> list[str]:
    return [o for o in p.options if o != p.correct_option]


def simulate_attempts(profile: StudentProfile, g: ConceptGraph, steps: int, seed: int,
                      cfg: DiagnosisConfig | None = None) -> list[AttemptRecord]:
    """Answer ``steps`` uniformly drawn problems; the learner's state evolves after each one."""
    cfg = cfg or DiagnosisConfig()
    if steps < 1:
        raise ValueError("steps must be at least 1")
    pool = sorted(pid for pid, p in g.problems.items() if p.linked_kp_ids)
    if not pool:
        raise ValueError("problem pool is empty")
    rng = random.Random(seed)
    state = profile.state()
    out = []
    for step in range(steps):
        p = g.problems[rng.choice(pool)]
        correct = rng.random() < answer_probability(state, p, cfg.p_min, cfg.p_max)
        wrong = _incorrect_options(p)
        if correct or not wrong:
            chosen, correct = p.correct_option, True
        else:
            chosen = rng.choice(wrong)
        rec = AttemptRecord(p.id, chosen, correct, step)
        out.append(rec)
        if cfg.update_during_simulation:
            diagnose(rec, g, state, cfg=cfg)
    return out


def diagnose(attempt: AttemptRecord, g: ConceptGraph, s: StudentState, blinded: bool = False,
             ctx: RetrievalContext | None = None, cfg: DiagnosisConfig | None = None) -> DiagnosisResult:
    """Link the attempt to concepts and misconceptions, then update ``s`` in place.

    Oracle mode reads ``linked_kp_ids`` and ``misconception_map``. Blinded mode
    links concepts by retrieval over the stem, then matches the chosen option's
    text against misconceptions of those concepts.
    """
    cfg = cfg or DiagnosisConfig()
    try:
        p = g.problems[attempt.problem_id]
    except KeyError:
        raise KeyError(f"unknown problem {attempt.problem_id}") from None
    if attempt.chosen_option not in p.options:
        raise ValueError(f"option {attempt.chosen_option!r} is not offered by {p.id}")

    if blinded:
        ctx = ctx or RetrievalContext.mock()
        linked = ctx.link(p, g, cfg.link_k)
    else:
        linked = frozenset(p.linked_kp_ids)

    misconceptions: frozenset[str] = frozenset()
    if not attempt.correct:
        if blinded:
            corpus = misconception_corpus(g, linked)
            if corpus:
                mcfg = RetrievalConfig(ctx.cfg.alpha, max(ctx.cfg.k_vector, 1), 1)
                top = retrieve(attempt.chosen_option, corpus, ctx.emb, ctx.ce, mcfg)
                misconceptions = frozenset(c.doc_id for c in top if c.ce_raw > cfg.min_misconception_score)
        elif attempt.chosen_option in p.misconception_map:
            misconceptions = frozenset({p.misconception_map[attempt.chosen_option]})

    delta = cfg.correct_delta if attempt.correct else cfg.incorrect_delta
    deltas = {c: delta for c in sorted(linked)}
    apply_mastery_update(s, deltas, g)
    s.misconceptions |= misconceptions

    weak = frozenset()
    if not attempt.correct:
        weak = linked | {g.misconceptions[m].concept_id for m in misconceptions}
    return DiagnosisResult(weak, misconceptions, deltas)


def true_weak_concepts(attempt: AttemptRecord, g: ConceptGraph) -> frozenset[str]:
    """Ground truth for one attempt, read from the problem annotations."""
    if attempt.correct:
        return frozenset()
    p = g.problems[attempt.problem_id]
    out = set(p.linked_kp_ids)
    mid = p.misconception_map.get(attempt.chosen_option)
    if mid is not None:
        out.add(g.misconceptions[mid].concept_id)
    return frozenset(out)


def replay(profile: StudentProfile, attempts: Sequence[AttemptRecord], g: ConceptGraph,
           blinded: bool = False, ctx: RetrievalContext | None = None,
           cfg: DiagnosisConfig | None = None) -> tuple[StudentState, list[DiagnosisResult]]:
    """Diagnose an attempt log from the profile's starting state."""
    state = profile.state()
    results = [diagnose(a, g, state, blinded, ctx, cfg) for a in attempts]
    return state, results


def diagnosis_metrics(predicted: Iterable[str], true: Iterable[str]) -> tuple[float, float, float]:
    predicted, true = set(predicted), set(true)
    if not predicted and not true:
        return 1.0, 1.0, 1.0
    if not predicted or not true:
        return 0.0, 0.0, 0.0
    hit = len(predicted & true)
    p = hit / len(predicted)
    r = hit / len(true)
    f1 = 0.0 if p + r == 0 else 2 * p * r / (p + r)
    return p, r, f1
