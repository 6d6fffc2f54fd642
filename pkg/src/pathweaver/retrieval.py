"""Two-stage retrieval: cosine TopK, cross-encoder rerank, score fusion, personalization.

Scoring backends are pluggable. The shipped ``mock`` providers are fully
deterministic and need no network:

* ``HashingEmbedder`` lowercases the text, pads it as ``^text$``, hashes every
  character 3-gram with BLAKE2b into ``dim`` buckets, counts, and L2-normalizes.
* ``TokenOverlapCrossEncoder`` scores ``|Q & D| / sqrt(|Q| * |D|)`` over the
  sets of lowercase alphanumeric tokens of query and document, with the
  English function words in ``STOPWORDS`` removed.
"""
from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Protocol, Sequence

import numpy as np

from .graph_store import ConceptGraph, StudentState


class RetrievalError(RuntimeError):
    def __init__(self, stage: str, cause: Exception | str):
        super().__init__(f"retrieval failed at stage '{stage}': {cause}")
        self.stage = stage


class EmbeddingProvider(Protocol):
    dim: int

    def embed(self, text: str) -> np.ndarray: ...


class CrossEncoder(Protocol):
    def score(self, query: str, text: str) -> float: ...


class HashingEmbedder:
    def __init__(self, dim: int = 256, n: int = 3):
        self.dim = dim
        self.n = n
        self._cache: dict[str, np.ndarray] = {}

    def embed(self, text: str) -> np.ndarray:
        vec = self._cache.get(text)
        if vec is None:
            vec = self._cache[text] = self._embed(text)
            vec.setflags(write=False)
        return vec

    def _embed(self, text: str) -> np.ndarray:
        padded = "^" + text.lower() + "$"
        grams = [padded[i:i + self.n] for i in range(len(padded) - self.n + 1)] or [padded]
        vec = np.zeros(self.dim)
        for gram in grams:
            h = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
            vec[int.from_bytes(h, "little") % self.dim] += 1.0
        return vec / np.linalg.norm(vec)


_TOKEN = re.compile(r"[a-z0-9]+")

STOPWORDS = frozenset(
    "a an and are as at be by does for from how in into is it its of on or s so than that the "
    "their there this to using what when where which while who why with".split()
)


def tokens(text: str) -> set[str]:
    return set(_TOKEN.findall(text.lower())) - STOPWORDS


class TokenOverlapCrossEncoder:
    def score(self, query: str, text: str) -> float:
        q, d = tokens(query), tokens(text)
        if not q or not d:
            return 0.0
        return len(q & d) / math.sqrt(len(q) * len(d))


PROVIDERS = {
    "mock": (HashingEmbedder, TokenOverlapCrossEncoder),
}


def get_providers(name: str = "mock") -> tuple[EmbeddingProvider, CrossEncoder]:
    try:
        emb_cls, ce_cls = PROVIDERS[name]
    except KeyError:
        raise ValueError(f"unknown provider {name!r}; known: {sorted(PROVIDERS)}") from None
    return emb_cls(), ce_cls()


@dataclass(frozen=True)
class RetrievalConfig:
    alpha: float = 0.5
    k_vector: int = 50
    k_final: int = 6

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if not 1 <= self.k_final <= self.k_vector:
            raise ValueError("need 1 <= k_final <= k_vector")


@dataclass(frozen=True)
class Document:
    doc_id: str
    text: str
    concept_ids: tuple[str, ...] = ()


@dataclass
class ScoredCandidate:
    doc_id: str
    bi_score: float
    ce_raw: float = 0.0
    ce_norm: float = 0.0
    fused: float = 0.0
    annotations: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "bi_score": self.bi_score,
            "ce_raw": self.ce_raw,
            "ce_norm": self.ce_norm,
            "fused": self.fused,
            "annotations": self.annotations,
        }


def cosine(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        raise ValueError("cosine of a zero vector")
    return float(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))


def normalize_ce(raw: Sequence[float]) -> list[float]:
    """Min-max over the kept candidates; identical scores all map to 0.5."""
    lo, hi = min(raw), max(raw)
    if hi == lo:
        return [0.5] * len(raw)
    return [(x - lo) / (hi - lo) for x in raw]


def fuse(candidates: list[ScoredCandidate], alpha: float, k: int) -> list[ScoredCandidate]:
    norm = normalize_ce([c.ce_raw for c in candidates])
    for c, n in zip(candidates, norm):
        c.ce_norm = n
        c.fused = alpha * c.bi_score + (1 - alpha) * n
    return sorted(candidates, key=lambda c: (-c.fused, c.doc_id))[:k]


def retrieve(query: str, corpus: Sequence[Document], emb: EmbeddingProvider, ce: CrossEncoder,
             cfg: RetrievalConfig | None = None, student: StudentState | None = None,
             g: ConceptGraph | None = None) -> list[ScoredCandidate]:
    cfg = cfg or RetrievalConfig()
    if not corpus:
        raise RetrievalError("input", "empty corpus")

    try:
        q_vec = emb.embed(query)
        d_vecs = [emb.embed(d.text) for d in corpus]
    except Exception as exc:
        raise RetrievalError("embedding", exc) from exc

    try:
        sims = [cosine(q_vec, v) for v in d_vecs]
    except Exception as exc:
        raise RetrievalError("vector", exc) from exc
    order = sorted(range(len(corpus)), key=lambda i: (-sims[i], corpus[i].doc_id))[:cfg.k_vector]
    kept = [ScoredCandidate(corpus[i].doc_id, sims[i]) for i in order]

    try:
        for c, i in zip(kept, order):
            c.ce_raw = float(ce.score(query, corpus[i].text))
    except Exception as exc:
        raise RetrievalError("rerank", exc) from exc

    ranked = fuse(kept, cfg.alpha, cfg.k_final)

    if student is not None:
        by_id = {d.doc_id: d for d in corpus}
        for c in ranked:
            cids = by_id[c.doc_id].concept_ids
            held = set(student.misconceptions)
            c.annotations = {
                "mastery": {cid: student.of(cid) for cid in cids},
                "misconceptions": sorted(
                    m for m in held
                    if g is not None and m in g.misconceptions and g.misconceptions[m].concept_id in cids
                ),
            }
    return ranked


def concept_corpus(g: ConceptGraph) -> list[Document]:
    return [Document(cid, g.concepts[cid].text, (cid,)) for cid in g.ids]


def misconception_corpus(g: ConceptGraph, concept_ids: Iterable[str] | None = None) -> list[Document]:
    wanted = None if concept_ids is None else set(concept_ids)
    return [
        Document(m.id, m.description, (m.concept_id,))
        for m in sorted(g.misconceptions.values(), key=lambda m: m.id)
        if wanted is None or m.concept_id in wanted
    ]


def blind_link_concepts(stem: str, g: ConceptGraph, emb: EmbeddingProvider, ce: CrossEncoder,
                        cfg: RetrievalConfig | None = None) -> set[str]:
    """Concepts a problem tests, inferred from its text alone."""
    return {c.doc_id for c in retrieve(stem, concept_corpus(g), emb, ce, cfg)}
