import pytest
from hypothesis import given, settings, strategies as st

from oracles import edit_distance
from pathweaver.pathsim import (
    SimWeights,
    jaccard,
    normalized_levenshtein,
    path_pair_sim,
    plan_similarity,
)
from pathweaver.planner import ConceptPath, LearningPlan


def _plan(paths=(), ind=()):
    return LearningPlan(paths=[ConceptPath(tuple(p)) for p in paths], independents=frozenset(ind))


@pytest.mark.parametrize("a, b, want", [
    ({"x", "y"}, {"x", "y"}, 1.0),
    ({"x"}, {"y"}, 0.0),
    ({"a", "b", "c"}, {"b", "c", "d"}, 0.5),
    (set(), set(), 1.0),
])
def test_jaccard(a, b, want):
    assert jaccard(a, b) == want


@pytest.mark.parametrize("a, b, want", [
    ("abc", "abc", 1.0),
    ("abc", "ac", 1 - 1 / 3),
    ("a", "b", 0.0),
    ("", "", 1.0),
])
def test_normalized_levenshtein(a, b, want):
    assert normalized_levenshtein(list(a), list(b)) == pytest.approx(want)


def test_path_pair_examples():
    assert path_pair_sim(("a", "b", "c"), ("a", "b", "c")) == 1.0
    assert path_pair_sim(("a", "b"), ("x", "y")) == 0.0
    assert path_pair_sim(("a", "b", "c"), ("a", "c")) == pytest.approx((2 / 3 + 0 + 2 / 3) / 3)


def test_single_node_paths_use_empty_edge_convention():
    # nodes 0, edges both empty -> 1, sequence 0
    assert path_pair_sim(("a",), ("b",)) == pytest.approx(1 / 3)


def test_plan_level_examples():
    a = _plan([["a", "b", "c"]], ["z"])
    assert plan_similarity(a, a).total == 1.0
    empty = plan_similarity(_plan(), _plan())
    assert (empty.sim_p, empty.sim_i, empty.total) == (1.0, 1.0, 1.0)
    one_sided = plan_similarity(_plan([["a", "b"]]), _plan())
    assert one_sided.sim_p == 0.0 and one_sided.sim_i == 1.0 and one_sided.total == 0.5

    b = _plan([["a", "b", "c"], ["a", "c"]], ["z", "y"])
    rep = plan_similarity(a, b)
    assert rep.matrix == [[1.0, pytest.approx(4 / 9)]]
    assert rep.sim_p == pytest.approx((1 + (1 + 4 / 9) / 2) / 2)
    assert rep.sim_i == 0.5
    assert rep.total == pytest.approx(0.680555555, abs=1e-9)
    assert set(rep.to_dict()) == {"sim_p", "sim_i", "total_sim", "matrix"}


def test_weights_validation_and_parse():
    with pytest.raises(ValueError):
        SimWeights(w_p=0.7, w_i=0.7)
    with pytest.raises(ValueError):
        SimWeights(node_w=0.5, edge_w=0.5, seq_w=0.5)
    assert SimWeights.parse("0.6,0.4") == SimWeights(0.6, 0.4)
    assert SimWeights.parse("0.5,0.5,1,0,0").node_w == 1.0
    with pytest.raises(ValueError):
        SimWeights.parse("1,0,0")


def test_component_weights_isolate_each_signal():
    a, b = ("a", "b", "c", "d"), ("a", "c", "d", "e")
    assert path_pair_sim(a, b, SimWeights(node_w=1, edge_w=0, seq_w=0)) == jaccard(a, b)
    assert path_pair_sim(a, b, SimWeights(node_w=0, edge_w=1, seq_w=0)) == jaccard(
        zip(a, a[1:]), zip(b, b[1:]))
    assert path_pair_sim(a, b, SimWeights(node_w=0, edge_w=0, seq_w=1)) == normalized_levenshtein(a, b)


def test_levenshtein_against_full_table():
    import random
    rng = random.Random(0)
    for _ in range(300):
        a = [rng.randrange(4) for _ in range(rng.randint(0, 9))]
        b = [rng.randrange(4) for _ in range(rng.randint(0, 9))]
        longest = max(len(a), len(b))
        want = 1.0 if longest == 0 else 1 - edit_distance(a, b) / longest
        assert normalized_levenshtein(a, b) == pytest.approx(want, abs=1e-15)


nodes = st.sampled_from("abcdefgh")
paths = st.lists(nodes, min_size=1, max_size=6, unique=True)
plans = st.builds(
    lambda ps, ind: _plan(ps, ind),
    st.lists(paths, max_size=4),
    st.sets(nodes, max_size=4),
)


@settings(max_examples=300, deadline=None)
@given(plans, plans)
def test_symmetry_bounds_identity(a, b):
    ab, ba = plan_similarity(a, b), plan_similarity(b, a)
    assert (ab.sim_p, ab.sim_i, ab.total) == (ba.sim_p, ba.sim_i, ba.total)
    assert all(0.0 <= x <= 1.0 for x in (ab.sim_p, ab.sim_i, ab.total))
    assert plan_similarity(a, a).total == 1.0


@settings(max_examples=200, deadline=None)
@given(plans, plans)
def test_replacing_a_path_with_a_disjoint_one_never_helps(a, b):
    if not b.paths:
        return
    worse = LearningPlan(paths=[ConceptPath(("q1", "q2"))] + b.paths[1:], independents=b.independents)
    assert plan_similarity(a, worse).sim_p <= plan_similarity(a, b).sim_p
