import pytest

from oracles import make_graph

ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def record(request):
    """Log one pass/fail line for an acceptance criterion and assert it."""
    def _record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        print(line)
        request.config.stash[ACCEPTANCE].append(line)
        assert ok, line
    return _record


@pytest.fixture
def line_graph():
    return make_graph("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])


@pytest.fixture
def diamond():
    return make_graph("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


@pytest.fixture
def tiny_kg_doc():
    return {
        "concepts": [
            {"id": "force", "name": "Force", "level": 1, "description": "a push or pull"},
            {"id": "mass", "name": "Mass", "level": 0, "description": "amount of matter"},
            {"id": "accel", "name": "Acceleration", "level": 2, "description": "rate of change of velocity"},
        ],
        "edges": [{"from": "mass", "to": "accel"}, {"from": "force", "to": "accel"}],
        "problems": [
            {"id": "p1", "stem": "What is a push?", "options": ["force", "mass"], "correct_option": "force",
             "difficulty": 0.3, "linked_kp_ids": ["force"], "misconception_map": {"mass": "m1"}},
        ],
        "misconceptions": [{"id": "m1", "description": "mass is a force", "concept_id": "force"}],
    }
