"""In-memory prerequisite knowledge graph, its JSON file format, and student state."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping

import numpy as np

EMBEDDING_NORM_TOL = 1e-6


class GraphError(ValueError):
    """Raised when a knowledge graph document violates a structural invariant."""


@dataclass(frozen=True)
class Concept:
    id: str
    name: str
    level: int = 0
    description: str = ""
    embedding: tuple[float, ...] | None = None

    @property
    def text(self) -> str:
        return self.description or self.name


@dataclass(frozen=True)
class Problem:
    id: str
    stem: str
    options: tuple[str, ...]
    correct_option: str
    difficulty: float
    linked_kp_ids: frozenset[str] = frozenset()
    misconception_map: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Misconception:
    id: str
    description: str
    concept_id: str


class ConceptGraph:
    """Immutable prerequisite graph. An edge ``(a, b)`` means *a* is learned before *b*.

    Concepts are indexed in sorted-id order; that index doubles as the
    tie-break order for path search.
    """

    def __init__(self, concepts: Iterable[Concept], edges: Iterable[tuple[str, str]],
                 problems: Iterable[Problem] = (), misconceptions: Iterable[Misconception] = (),
                 graph_id: str = "kg"):
        self.graph_id = graph_id
        self.concepts: dict[str, Concept] = {}
        for c in concepts:
            if c.id in self.concepts:
                raise GraphError(f"duplicate concept id {c.id}")
            if c.level < 0:
                raise GraphError(f"negative level at {c.id}")
            if c.embedding is not None:
                norm = math.sqrt(sum(x * x for x in c.embedding))
                if abs(norm - 1.0) > EMBEDDING_NORM_TOL:
                    raise GraphError(f"embedding of {c.id} is not unit-norm (|e|={norm:.8g})")
            self.concepts[c.id] = c

        self.ids: tuple[str, ...] = tuple(sorted(self.concepts))
        self.index = {cid: i for i, cid in enumerate(self.ids)}

        out: dict[str, set[str]] = {cid: set() for cid in self.ids}
        inn: dict[str, set[str]] = {cid: set() for cid in self.ids}
        edge_list = []
        for a, b in edges:
            for x in (a, b):
                if x not in self.concepts:
                    raise GraphError(f"edge {a}->{b} references unknown concept {x}")
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if b in out[a]:
                raise GraphError(f"duplicate edge {a}->{b}")
            out[a].add(b)
            inn[b].add(a)
            edge_list.append((a, b))
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(edge_list))
        self.out_neighbors = {k: tuple(sorted(v)) for k, v in out.items()}
        self.in_neighbors = {k: tuple(sorted(v)) for k, v in inn.items()}
        self.topo_order = self._toposort()

        self.misconceptions: dict[str, Misconception] = {}
        for m in misconceptions:
            if m.id in self.misconceptions:
                raise GraphError(f"duplicate misconception id {m.id}")
            if m.concept_id not in self.concepts:
                raise GraphError(f"misconception {m.id} references unknown concept {m.concept_id}")
            self.misconceptions[m.id] = m

        self.problems: dict[str, Problem] = {}
        by_concept: dict[str, list[str]] = {cid: [] for cid in self.ids}
        for p in problems:
            self._check_problem(p)
            self.problems[p.id] = p
            for cid in p.linked_kp_ids:
                by_concept[cid].append(p.id)
        self.problems_by_concept = {k: tuple(sorted(v)) for k, v in by_concept.items()}

        self.misconceptions_by_concept: dict[str, tuple[str, ...]] = {cid: () for cid in self.ids}
        for m in sorted(self.misconceptions.values(), key=lambda m: m.id):
            self.misconceptions_by_concept[m.concept_id] += (m.id,)

        # CSR out-adjacency over concept indices, consumed by the path kernels
        indptr = [0]
        indices = []
        for cid in self.ids:
            indices.extend(self.index[b] for b in self.out_neighbors[cid])
            indptr.append(len(indices))
        self.indptr = np.asarray(indptr, dtype=np.int_)
        self.indices = np.asarray(indices, dtype=np.int_)

    def _check_problem(self, p: Problem) -> None:
        if p.id in self.problems:
            raise GraphError(f"duplicate problem id {p.id}")
        if p.correct_option not in p.options:
            raise GraphError(f"problem {p.id}: correct option {p.correct_option!r} not among options")
        if not 0.0 <= p.difficulty <= 1.0:
            raise GraphError(f"problem {p.id}: difficulty {p.difficulty} outside [0,1]")
        for cid in p.linked_kp_ids:
            if cid not in self.concepts:
                raise GraphError(f"problem {p.id} links unknown concept {cid}")
        for opt, mid in p.misconception_map.items():
            if opt not in p.options or opt == p.correct_option:
                raise GraphError(f"problem {p.id}: misconception_map key {opt!r} is not an incorrect option")
            if mid not in self.misconceptions:
                raise GraphError(f"problem {p.id} maps to unknown misconception {mid}")

    def _toposort(self) -> tuple[str, ...]:
        indeg = {cid: len(self.in_neighbors[cid]) for cid in self.ids}
        ready = sorted(cid for cid, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in self.out_neighbors[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
            ready.sort()
        if len(order) != len(self.ids):
            raise GraphError("cycle " + ",".join(self._find_cycle(indeg)))
        return tuple(order)

    def _find_cycle(self, indeg: Mapping[str, int]) -> list[str]:
        # every node left with indeg > 0 lies on or behind a cycle; walk predecessors until one repeats
        remaining = {v for v, d in indeg.items() if d > 0}
        v = min(remaining)
        seen: dict[str, int] = {}
        walk = []
        while v not in seen:
            seen[v] = len(walk)
            walk.append(v)
            v = min(u for u in self.in_neighbors[v] if u in remaining)
        cycle = walk[seen[v]:][::-1]
        k = cycle.index(min(cycle))
        return cycle[k:] + cycle[:k]

    def __contains__(self, cid: str) -> bool:
        return cid in self.concepts

    def __len__(self) -> int:
        return len(self.concepts)

    def require(self, cid: str) -> None:
        if cid not in self.concepts:
            raise KeyError(f"unknown concept id {cid}")

    def out_degree(self, v: str) -> int:
        self.require(v)
        return len(self.out_neighbors[v])

    def to_dict(self) -> dict:
        def concept(c: Concept) -> dict:
            d = {"id": c.id, "name": c.name, "level": c.level, "description": c.description}
            if c.embedding is not None:
                d["embedding"] = list(c.embedding)
            return d

        return {
            "concepts": [concept(self.concepts[c]) for c in self.ids],
            "edges": [{"from": a, "to": b} for a, b in self.edges],
            "problems": [
                {
                    "id": p.id,
                    "stem": p.stem,
                    "options": list(p.options),
                    "correct_option": p.correct_option,
                    "difficulty": p.difficulty,
                    "linked_kp_ids": sorted(p.linked_kp_ids),
                    "misconception_map": dict(sorted(p.misconception_map.items())),
                }
                for p in sorted(self.problems.values(), key=lambda p: p.id)
            ],
            "misconceptions": [
                {"id": m.id, "description": m.description, "concept_id": m.concept_id}
                for m in sorted(self.misconceptions.values(), key=lambda m: m.id)
            ],
        }

    @classmethod
    def from_dict(cls, doc: Mapping, graph_id: str = "kg") -> "ConceptGraph":
        try:
            concepts = [
                Concept(
                    id=str(c["id"]),
                    name=str(c.get("name", c["id"])),
                    level=int(c.get("level", 0)),
                    description=str(c.get("description") or ""),
                    embedding=tuple(float(x) for x in c["embedding"]) if c.get("embedding") is not None else None,
                )
                for c in doc.get("concepts", [])
            ]
            edges = [(str(e["from"]), str(e["to"])) for e in doc.get("edges", [])]
            misconceptions = [
                Misconception(id=str(m["id"]), description=str(m.get("description", "")),
                              concept_id=str(m["concept_id"]))
                for m in doc.get("misconceptions", [])
            ]
            problems = [
                Problem(
                    id=str(p["id"]),
                    stem=str(p.get("stem", "")),
                    options=tuple(str(o) for o in p["options"]),
                    correct_option=str(p["correct_option"]),
                    difficulty=float(p.get("difficulty", 0.5)),
                    linked_kp_ids=frozenset(str(x) for x in p.get("linked_kp_ids", [])),
                    misconception_map={str(k): str(v) for k, v in (p.get("misconception_map") or {}).items()},
                )
                for p in doc.get("problems", [])
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed document: {exc!r}") from exc
        return cls(concepts, edges, problems, misconceptions, graph_id=graph_id)


def load_graph(source: IO, graph_id: str = "kg") -> ConceptGraph:
    """Parse a KG JSON document from a text or byte stream and validate it."""
    raw = source.read()
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise GraphError(f"parse failure: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphError("parse failure: top level must be an object")
    return ConceptGraph.from_dict(doc, graph_id=graph_id)


def load_graph_file(path, graph_id: str | None = None) -> ConceptGraph:
    from pathlib import Path

    path = Path(path)
    with path.open("rb") as fh:
        return load_graph(fh, graph_id=graph_id or path.stem)


def dump_graph(g: ConceptGraph, sink: IO) -> None:
    json.dump(g.to_dict(), sink, indent=2)


def out_degree(g: ConceptGraph, v: str) -> int:
    return g.out_degree(v)


# -- deduplication -----------------------------------------------------------

@dataclass
class MergeReport:
    groups: list[list[str]]
    dropped_edges: list[tuple[str, str]]

    @property
    def survivor_of(self) -> dict[str, str]:
        return {cid: grp[0] for grp in self.groups for cid in grp}


def dedup_concepts(g: ConceptGraph, threshold: float = 0.9) -> tuple[ConceptGraph, MergeReport]:
    """Merge concepts whose embedding cosine similarity exceeds ``threshold``.

    Groups are the connected components of the above-threshold similarity
    graph (single linkage); the lowest id in a group survives and every edge,
    problem link and misconception is rewired to it. Edges that collapse into
    self-loops are dropped and listed in the report.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must lie in (0, 1]")
    ids = list(g.ids)
    missing = [cid for cid in ids if g.concepts[cid].embedding is None]
    if missing:
        raise GraphError("missing embedding for " + ",".join(missing))

    parent = list(range(len(ids)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    if ids:
        emb = np.array([g.concepts[cid].embedding for cid in ids], dtype=float)
        emb /= np.linalg.norm(emb, axis=1, keepdims=True)
        sims = emb @ emb.T
        rows, cols = np.nonzero(np.triu(sims > threshold, k=1))
        for i, j in zip(rows.tolist(), cols.tolist()):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    # ids are sorted, so the smallest index in a component is its lowest id
    members: dict[int, list[str]] = {}
    for i, cid in enumerate(ids):
        members.setdefault(find(i), []).append(cid)
    survivor = {cid: grp[0] for grp in members.values() for cid in grp}
    groups = sorted(grp for grp in members.values() if len(grp) > 1)

    dropped = []
    new_edges = set()
    for a, b in g.edges:
        sa, sb = survivor[a], survivor[b]
        if sa == sb:
            dropped.append((a, b))
        else:
            new_edges.add((sa, sb))

    concepts = [g.concepts[cid] for cid in ids if survivor[cid] == cid]
    misconceptions = [
        Misconception(m.id, m.description, survivor[m.concept_id]) for m in g.misconceptions.values()
    ]
    problems = [
        Problem(p.id, p.stem, p.options, p.correct_option, p.difficulty,
                frozenset(survivor[c] for c in p.linked_kp_ids), dict(p.misconception_map))
        for p in g.problems.values()
    ]
    merged = ConceptGraph(concepts, sorted(new_edges), problems, misconceptions, graph_id=g.graph_id)
    return merged, MergeReport(groups=groups, dropped_edges=dropped)


# -- student state -----------------------------------------------------------

MASTERED_THRESHOLD = 0.8
WEAK_THRESHOLD = 0.4


@dataclass
class StudentState:
    """Mutable per-student mastery map. Missing entries read as 0."""

    student_id: str
    mastery: dict[str, float] = field(default_factory=dict)
    misconceptions: set[str] = field(default_factory=set)

    def __post_init__(self):
        for cid, m in self.mastery.items():
            if not 0.0 <= m <= 1.0:
                raise ValueError(f"mastery of {cid} is {m}, outside [0,1]")

    def of(self, cid: str) -> float:
        return self.mastery.get(cid, 0.0)

    def copy(self) -> "StudentState":
        return StudentState(self.student_id, dict(self.mastery), set(self.misconceptions))

    def check(self, g: ConceptGraph) -> "StudentState":
        for cid in self.mastery:
            g.require(cid)
        for mid in self.misconceptions:
            if mid not in g.misconceptions:
                raise KeyError(f"unknown misconception id {mid}")
        return self

    def to_dict(self) -> dict:
        return {
            "student_id": self.student_id,
            "mastery": dict(sorted(self.mastery.items())),
            "misconceptions": sorted(self.misconceptions),
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "StudentState":
        return cls(
            student_id=str(doc.get("student_id", "student")),
            mastery={str(k): float(v) for k, v in doc.get("mastery", {}).items()},
            misconceptions={str(m) for m in doc.get("misconceptions", [])},
        )


def apply_mastery_update(s: StudentState, updates: Mapping[str, float],
                         g: ConceptGraph | None = None) -> StudentState:
    """Add each delta to the student's mastery, clamped to [0, 1]. Mutates ``s``."""
    if g is not None:
        for cid in updates:
            g.require(cid)
    for cid, delta in updates.items():
        s.mastery[cid] = min(1.0, max(0.0, s.of(cid) + delta))
    return s


def classify(g: ConceptGraph, s: StudentState, mastered: float = MASTERED_THRESHOLD,
             weak: float = WEAK_THRESHOLD) -> tuple[set[str], set[str]]:
    """Split concepts into (sources, weak). Concepts tied to a held misconception count as weak."""
    weak_set = {cid for cid in g.ids if s.of(cid) < weak}
    weak_set |= {g.misconceptions[m].concept_id for m in s.misconceptions if m in g.misconceptions}
    sources = {cid for cid in g.ids if s.of(cid) >= mastered} - weak_set
    return sources, weak_set
