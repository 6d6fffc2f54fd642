import random

import pytest
from scipy import stats

from oracles import make_graph
from pathweaver.eval_harness import DATA_DIR, DEFAULT_KG
from pathweaver.graph_store import Misconception, Problem, StudentState, load_graph_file
from pathweaver.student_sim import (
    AttemptRecord,
    DiagnosisConfig,
    RetrievalContext,
    StudentProfile,
    answer_probability,
    diagnose,
    diagnosis_metrics,
    generate_cohort,
    replay,
    simulate_attempts,
    true_weak_concepts,
)


@pytest.fixture(scope="module")
def kg():
    return load_graph_file(DEFAULT_KG)


@pytest.fixture(scope="module")
def perfect():
    return load_graph_file(DATA_DIR / "perfect_kg.json")


def _toy():
    probs = [Problem("p", "stem", ("r", "w1", "w2"), "r", 0.5, frozenset({"a"}), {"w1": "m"})]
    return make_graph("ab", [("a", "b")], problems=probs, misconceptions=[Misconception("m", "d", "b")])


def test_cohort_determinism_and_distinctness(kg):
    assert generate_cohort(kg, 1, 7) == generate_cohort(kg, 1, 7)
    a, b = generate_cohort(kg, 15, 42), generate_cohort(kg, 15, 42)
    assert a == b
    vectors = {tuple(p.mastery[c] for c in kg.ids) for p in a}
    assert len(vectors) == 15
    assert all(0.0 <= m <= 1.0 for p in a for m in p.mastery.values())
    with pytest.raises(ValueError):
        generate_cohort(kg, 0, 1)


def test_profile_round_trip(kg):
    p = generate_cohort(kg, 1, 3)[0]
    assert StudentProfile.from_dict(p.to_dict()) == p


@pytest.mark.parametrize("m, want", [(1.0, 0.95), (0.0, 0.10), (0.5, 0.525)])
def test_answer_probability(m, want):
    p = Problem("p", "s", ("r",), "r", 0.5, frozenset({"a", "b"}))
    assert answer_probability(StudentState("s", {"a": m, "b": m}), p) == pytest.approx(want)


def test_answer_probability_needs_links_and_is_monotone():
    with pytest.raises(ValueError):
        answer_probability(StudentState("s"), Problem("p", "s", ("r",), "r", 0.5))
    p = Problem("p", "s", ("r",), "r", 0.5, frozenset({"a", "b"}))
    rng = random.Random(0)
    for _ in range(100):
        base = {"a": rng.random(), "b": rng.random()}
        up = dict(base, a=min(1.0, base["a"] + rng.random()))
        assert answer_probability(StudentState("s", up), p) >= answer_probability(StudentState("s", base), p)


def test_full_mastery_with_no_slip_is_always_correct(kg):
    prof = StudentProfile("s", {c: 1.0 for c in kg.ids}, 5)
    log = simulate_attempts(prof, kg, 15, 5, DiagnosisConfig(p_max=1.0))
    assert len(log) == 15 and all(a.correct for a in log)


def test_trajectories_reproducible_and_valid(kg):
    prof = generate_cohort(kg, 1, 11)[0]
    a = simulate_attempts(prof, kg, 15, 99)
    assert a == simulate_attempts(prof, kg, 15, 99)
    for rec in a:
        p = kg.problems[rec.problem_id]
        assert rec.chosen_option in p.options
        assert rec.correct == (rec.chosen_option == p.correct_option)
    with pytest.raises(ValueError):
        simulate_attempts(prof, kg, 0, 1)


def test_empty_problem_pool():
    g = make_graph("a", [])
    with pytest.raises(ValueError, match="empty"):
        simulate_attempts(StudentProfile("s", {"a": 0.5}, 1), g, 3, 1)


def test_correctness_tracks_initial_mastery(kg):
    cohort = generate_cohort(kg, 15, 42)
    means, rates = [], []
    for prof in cohort:
        log = simulate_attempts(prof, kg, 15, prof.seed)
        means.append(sum(prof.mastery.values()) / len(prof.mastery))
        rates.append(sum(a.correct for a in log) / len(log))
    assert stats.spearmanr(means, rates).statistic > 0


def test_mastery_stays_in_unit_interval(kg):
    for prof in generate_cohort(kg, 5, 2):
        log = simulate_attempts(prof, kg, 30, prof.seed)
        state = prof.state()
        for rec in log:
            diagnose(rec, kg, state)
            assert all(0.0 <= m <= 1.0 for m in state.mastery.values())


def test_diagnose_correct_answer():
    g = _toy()
    s = StudentState("s", {"a": 0.5})
    res = diagnose(AttemptRecord("p", "r", True, 0), g, s)
    assert s.mastery["a"] == pytest.approx(0.6)
    assert res.misconceptions == frozenset() and res.weak_concepts == frozenset()


def test_diagnose_incorrect_with_mapped_misconception():
    g = _toy()
    s = StudentState("s", {"a": 0.5})
    res = diagnose(AttemptRecord("p", "w1", False, 0), g, s)
    assert res.misconceptions == {"m"} and s.misconceptions == {"m"}
    assert res.weak_concepts == {"a", "b"}
    assert s.mastery["a"] == pytest.approx(0.35)
    res = diagnose(AttemptRecord("p", "w2", False, 1), g, s)
    assert res.misconceptions == frozenset() and res.weak_concepts == {"a"}


def test_diagnose_rejects_bad_attempts():
    g = _toy()
    with pytest.raises(KeyError):
        diagnose(AttemptRecord("zz", "r", True, 0), g, StudentState("s"))
    with pytest.raises(ValueError):
        diagnose(AttemptRecord("p", "nope", False, 0), g, StudentState("s"))


def test_blinded_equals_oracle_when_retrieval_is_exact(perfect):
    ctx = RetrievalContext.mock()
    for pid, p in sorted(perfect.problems.items()):
        for opt in p.options:
            rec = AttemptRecord(pid, opt, opt == p.correct_option, 0)
            so, sb = StudentState("s", {c: 0.5 for c in perfect.ids}), StudentState("s", {c: 0.5 for c in perfect.ids})
            o = diagnose(rec, perfect, so)
            b = diagnose(rec, perfect, sb, blinded=True, ctx=ctx)
            assert o.weak_concepts == b.weak_concepts and o.misconceptions == b.misconceptions
            assert so == sb
            assert o.weak_concepts == true_weak_concepts(rec, perfect)


def test_replay_matches_stepwise_diagnosis(kg):
    prof = generate_cohort(kg, 1, 4)[0]
    log = simulate_attempts(prof, kg, 10, prof.seed)
    state, results = replay(prof, log, kg)
    manual = prof.state()
    for rec in log:
        diagnose(rec, kg, manual)
    assert state == manual and len(results) == 10


@pytest.mark.parametrize("pred, true, want", [
    ({"a"}, {"a"}, (1, 1, 1)),
    ({"a"}, {"b"}, (0, 0, 0)),
    ({"a", "b", "c"}, {"b", "c", "d"}, (2 / 3, 2 / 3, 2 / 3)),
    (set(), set(), (1, 1, 1)),
    (set(), {"a"}, (0, 0, 0)),
])
def test_diagnosis_metrics(pred, true, want):
    assert diagnosis_metrics(pred, true) == pytest.approx(want)


def test_config_validation():
    with pytest.raises(ValueError):
        DiagnosisConfig(p_min=0.9, p_max=0.1)
    with pytest.raises(ValueError):
        DiagnosisConfig(link_k=0)
