import io
import json
import math
import random

import pytest

from oracles import make_graph, random_dag
from pathweaver.graph_store import (
    Concept,
    ConceptGraph,
    GraphError,
    Misconception,
    Problem,
    StudentState,
    apply_mastery_update,
    classify,
    dedup_concepts,
    dump_graph,
    load_graph,
    out_degree,
)


def _doc(concepts, edges, **extra):
    return {
        "concepts": [{"id": c, "name": c} for c in concepts],
        "edges": [{"from": a, "to": b} for a, b in edges],
        "problems": extra.get("problems", []),
        "misconceptions": extra.get("misconceptions", []),
    }


def _load(doc):
    return load_graph(io.BytesIO(json.dumps(doc).encode("utf-8")))


def test_minimal_document():
    g = _load(_doc(["a"], []))
    assert len(g) == 1 and g.edges == ()


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop at a"):
        _load(_doc(["a"], [("a", "a")]))


def test_three_cycle_named():
    with pytest.raises(GraphError, match="cycle a,b,c"):
        _load(_doc("abc", [("a", "b"), ("b", "c"), ("c", "a")]))


def test_cycle_behind_a_tail_reports_only_the_cycle():
    with pytest.raises(GraphError) as exc:
        _load(_doc("xyzq", [("q", "x"), ("x", "y"), ("y", "z"), ("z", "x")]))
    assert str(exc.value) == "cycle x,y,z"


@pytest.mark.parametrize("doc, msg", [
    (_doc(["a", "a"], []), "duplicate concept id a"),
    (_doc(["a"], [("a", "b")]), "unknown concept b"),
    (_doc("ab", [("a", "b"), ("a", "b")]), "duplicate edge a->b"),
])
def test_structural_errors(doc, msg):
    with pytest.raises(GraphError, match=msg):
        _load(doc)


def test_parse_failure():
    with pytest.raises(GraphError, match="parse failure"):
        load_graph(io.StringIO("{not json"))
    with pytest.raises(GraphError, match="top level"):
        load_graph(io.StringIO("[]"))


def test_problem_invariants(tiny_kg_doc):
    good = _load(tiny_kg_doc)
    assert good.problems_by_concept["force"] == ("p1",)
    assert good.misconceptions_by_concept["force"] == ("m1",)

    bad = json.loads(json.dumps(tiny_kg_doc))
    bad["problems"][0]["correct_option"] = "nope"
    with pytest.raises(GraphError, match="not among options"):
        _load(bad)

    bad = json.loads(json.dumps(tiny_kg_doc))
    bad["problems"][0]["misconception_map"] = {"force": "m1"}
    with pytest.raises(GraphError, match="not an incorrect option"):
        _load(bad)

    bad = json.loads(json.dumps(tiny_kg_doc))
    bad["problems"][0]["difficulty"] = 1.5
    with pytest.raises(GraphError, match="outside"):
        _load(bad)

    bad = json.loads(json.dumps(tiny_kg_doc))
    bad["problems"][0]["linked_kp_ids"] = ["ghost"]
    with pytest.raises(GraphError, match="unknown concept ghost"):
        _load(bad)

    bad = json.loads(json.dumps(tiny_kg_doc))
    bad["misconceptions"][0]["concept_id"] = "ghost"
    with pytest.raises(GraphError, match="unknown concept ghost"):
        _load(bad)


def test_level_and_embedding_checks():
    with pytest.raises(GraphError, match="negative level"):
        ConceptGraph([Concept("a", "a", level=-1)], [])
    with pytest.raises(GraphError, match="unit-norm"):
        ConceptGraph([Concept("a", "a", embedding=(1.0, 1.0))], [])
    ConceptGraph([Concept("a", "a", embedding=(0.6, 0.8))], [])


def test_round_trip(tiny_kg_doc):
    g = _load(tiny_kg_doc)
    buf = io.StringIO()
    dump_graph(g, buf)
    h = load_graph(io.StringIO(buf.getvalue()))
    assert h.to_dict() == g.to_dict()
    assert h.edges == g.edges
    assert {p: q.linked_kp_ids for p, q in h.problems.items()} == {p: q.linked_kp_ids for p, q in g.problems.items()}


def test_topological_order_respects_edges():
    rng = random.Random(0)
    for _ in range(50):
        g = random_dag(rng, rng.randint(1, 25))
        pos = {v: i for i, v in enumerate(g.topo_order)}
        assert sorted(g.topo_order) == list(g.ids)
        assert all(pos[a] < pos[b] for a, b in g.edges)


def test_csr_matches_adjacency():
    rng = random.Random(1)
    g = random_dag(rng, 15, p=0.4)
    for v in g.ids:
        i = g.index[v]
        assert [g.ids[j] for j in g.indices[g.indptr[i]:g.indptr[i + 1]]] == list(g.out_neighbors[v])


def test_out_degree():
    g = make_graph("abcd", [("a", "b"), ("a", "c"), ("a", "d")])
    assert out_degree(g, "a") == 3
    assert out_degree(g, "b") == 0
    n = 7
    star = make_graph(["hub"] + [f"l{i}" for i in range(n)], [("hub", f"l{i}") for i in range(n)])
    assert out_degree(star, "hub") == n
    with pytest.raises(KeyError):
        out_degree(g, "zz")


def _emb_graph(vectors, edges=()):
    concepts = []
    for cid, v in vectors.items():
        n = math.sqrt(sum(x * x for x in v))
        concepts.append(Concept(cid, cid, embedding=tuple(x / n for x in v)))
    return ConceptGraph(concepts, list(edges))


def _angle_vec(theta):
    return (math.cos(theta), math.sin(theta))


def test_dedup_identical_and_orthogonal():
    g, rep = dedup_concepts(_emb_graph({"a": (1, 0), "b": (1, 0), "c": (0, 1)}))
    assert g.ids == ("a", "c")
    assert rep.groups == [["a", "b"]]


def test_dedup_single_linkage_chain():
    # a-b and b-c at cos 0.95, a-c at cos(2 acos .95) ~ 0.805
    t = math.acos(0.95)
    g0 = _emb_graph({"a": _angle_vec(0), "b": _angle_vec(t), "c": _angle_vec(2 * t)})
    g, rep = dedup_concepts(g0, 0.9)
    assert rep.groups == [["a", "b", "c"]]
    assert g.ids == ("a",)


def test_dedup_rewires_and_drops_self_loops():
    concepts = [Concept("a", "a", embedding=(1.0, 0.0)), Concept("b", "b", embedding=(1.0, 0.0)),
                Concept("x", "x", embedding=(0.0, 1.0))]
    probs = [Problem("p", "?", ("r", "w"), "r", 0.5, frozenset({"b"}), {"w": "m"})]
    mis = [Misconception("m", "d", "b")]
    g0 = ConceptGraph(concepts, [("a", "b"), ("b", "x"), ("a", "x")], probs, mis)
    g, rep = dedup_concepts(g0)
    assert g.edges == (("a", "x"),)
    assert rep.dropped_edges == [("a", "b")]
    assert g.problems["p"].linked_kp_ids == {"a"}
    assert g.misconceptions["m"].concept_id == "a"
    again, rep2 = dedup_concepts(g)
    assert again.to_dict() == g.to_dict() and rep2.groups == []


def _components(ids, sims, threshold):
    seen, out = set(), []
    for start in ids:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in ids:
                if v not in seen and sims[u][v] > threshold:
                    seen.add(v)
                    stack.append(v)
        out.append(sorted(comp))
    return sorted(out)


def test_dedup_matches_component_oracle():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 12)
        vecs = {f"c{i:02d}": _angle_vec(rng.uniform(0, 1.2)) for i in range(n)}
        g0 = _emb_graph(vecs)
        ids = list(g0.ids)
        sims = {u: {v: sum(x * y for x, y in zip(g0.concepts[u].embedding, g0.concepts[v].embedding))
                    for v in ids} for u in ids}
        _, rep = dedup_concepts(g0, 0.97)
        want = [c for c in _components(ids, sims, 0.97) if len(c) > 1]
        assert rep.groups == want


def test_dedup_needs_embeddings_and_valid_threshold():
    with pytest.raises(GraphError, match="missing embedding"):
        dedup_concepts(make_graph("ab", []))
    with pytest.raises(ValueError):
        dedup_concepts(_emb_graph({"a": (1, 0)}), 0.0)


def test_dedup_merge_creating_cycle_is_an_error():
    concepts = [Concept("a", "a", embedding=(1.0, 0.0)), Concept("b", "b", embedding=(0.0, 1.0)),
                Concept("c", "c", embedding=(1.0, 0.0))]
    with pytest.raises(GraphError, match="cycle"):
        dedup_concepts(ConceptGraph(concepts, [("a", "b"), ("b", "c")]))


@pytest.mark.parametrize("start, delta, end", [(0.5, 0.2, 0.7), (0.95, 0.2, 1.0), (0.1, -0.3, 0.0)])
def test_mastery_update_clamps(start, delta, end):
    s = StudentState("s", {"a": start, "b": 0.3})
    apply_mastery_update(s, {"a": delta}, make_graph("ab", []))
    assert s.mastery["a"] == pytest.approx(end)
    assert s.mastery["b"] == 0.3


def test_mastery_update_rejects_unknown_concept():
    with pytest.raises(KeyError):
        apply_mastery_update(StudentState("s"), {"zz": 0.1}, make_graph("a", []))


def test_student_state_checks():
    with pytest.raises(ValueError):
        StudentState("s", {"a": 1.2})
    g = make_graph("ab", [])
    with pytest.raises(KeyError):
        StudentState("s", {"zz": 0.5}).check(g)
    s = StudentState("s", {"a": 0.9}, {"m"})
    assert StudentState.from_dict(s.to_dict()) == s
    assert StudentState("s").of("a") == 0.0


def test_classify_thresholds_and_misconceptions():
    mis = [Misconception("m", "d", "a")]
    g = make_graph("abcd", [], misconceptions=mis)
    s = StudentState("s", {"a": 0.9, "b": 0.8, "c": 0.39, "d": 0.5}, {"m"})
    sources, weak = classify(g, s)
    assert sources == {"b"}
    assert weak == {"a", "c"}
