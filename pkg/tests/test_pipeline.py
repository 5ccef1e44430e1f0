import random

import pytest

from holeforge.c5 import JoinCliqueC5, NearUniformConstruction
from holeforge.cliquewidth import evaluate
from holeforge.coloring import exact_chromatic, max_clique
from holeforge.detection import class_report
from holeforge.generate import glue_on_clique, random_in_class
from holeforge.graph import complete_graph, cycle_graph, induced_subgraph, join, make_graph
from holeforge.pipeline import C5_CASE_III, C5_CASE_IV, C7_UNIFORM, FALLBACK, PERFECT, color_in_class


def test_c7():
    col, trace = color_in_class(cycle_graph(7))
    assert col.count == 3 and col.is_proper(cycle_graph(7))
    assert [a.branch for a in trace.atoms] == [C7_UNIFORM]


def test_wheel():
    G = join(complete_graph(1), cycle_graph(5))
    col, trace = color_in_class(G)
    assert col.count == 4 == exact_chromatic(G)[0]
    assert [a.branch for a in trace.atoms] == [C5_CASE_IV]
    assert isinstance(trace.atoms[0].artifacts["outcome"], JoinCliqueC5)


def test_c5_twin_falls_back(c5_twin):
    col, trace = color_in_class(c5_twin)
    assert col.count == 3
    assert [a.branch for a in trace.atoms] == [FALLBACK]


def test_case_iii_atom():
    # C5 + f seeing hole vertex 1 + t seeing hole vertices 3, 4 and f
    G = make_graph(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (6, 2), (6, 3), (5, 6)])
    col, trace = color_in_class(G)
    assert [a.branch for a in trace.atoms] == [C5_CASE_III]
    art = trace.atoms[0].artifacts
    assert evaluate(art["expression"]).equals(G)
    assert isinstance(art["outcome"], NearUniformConstruction)
    assert col.count == exact_chromatic(G)[0]


def test_perfect_branch():
    G = complete_graph(4)
    col, trace = color_in_class(G)
    assert col.count == 4 and trace.atoms[0].branch == PERFECT


def test_glued_c7_atoms():
    rng = random.Random(5)
    A = random_in_class(9, 1, require="c7")
    B = random_in_class(9, 2, require="c7")
    G = glue_on_clique(A, B, 2, rng)
    col, trace = color_in_class(G)
    assert len(trace.atoms) >= 2
    assert col.count == max(exact_chromatic(A)[0], exact_chromatic(B)[0]) == exact_chromatic(G)[0]


@pytest.mark.parametrize("seed", range(30))
def test_matches_exact(seed):
    require = [None, "c5", "c7"][seed % 3]
    G = random_in_class(7 + seed % 6, seed, require=require, twin_free=seed % 2 == 0)
    col, trace = color_in_class(G)
    assert col.is_proper(G)
    assert col.count == exact_chromatic(G)[0]
    for a in trace.atoms:
        sub = induced_subgraph(G, a.vertices).graph
        assert a.clique == max_clique(sub).size
        assert a.report == class_report(sub)
        if "expression" in a.artifacts:
            assert evaluate(a.artifacts["expression"]).equals(sub)
