import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from holeforge.graph import make_graph

from oracles import C5_TWIN_EDGES

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picked = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, b in zip(pairs, picked) if b])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return make_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def c5_twin():
    return make_graph(6, C5_TWIN_EDGES)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None:
        return
    outcomes = {}
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py::test_criterion_" in rep.nodeid and rep.when == "call":
                outcomes[int(rep.nodeid.split("test_criterion_")[1][:2])] = status
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        mark = "PASS" if outcomes[number] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {mark}  {mod.VERDICTS.get(number, '')}")
