import pytest
from hypothesis import given

from holeforge.graph import (
    GraphError,
    UniformStatus,
    are_joined,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_clique,
    join,
    make_graph,
)

from conftest import graphs


def test_k2():
    G = make_graph(2, [(0, 1)])
    assert G.n == 2 and G.has_edge(0, 1) and G.has_edge(1, 0)


def test_c7_from_edges():
    G = make_graph(7, [(i, (i + 1) % 7) for i in range(7)])
    assert G == cycle_graph(7)
    assert all(G.degree(v) == 2 for v in G.vertices)


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        make_graph(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])


def test_duplicate_edges_collapse():
    assert make_graph(2, [(0, 1), (1, 0)]).m == 1


def test_induced_path_in_c7():
    sub, ids = induced_subgraph(cycle_graph(7), {0, 1, 2})
    assert ids == (0, 1, 2)
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]


def test_induced_keeps_identities():
    sub, ids = induced_subgraph(complete_graph(4), {3, 1, 2})
    assert ids == (1, 2, 3)
    assert sub == complete_graph(3)


def test_induced_empty():
    sub, ids = induced_subgraph(cycle_graph(5), set())
    assert sub.n == 0 and ids == ()


def test_is_clique_examples():
    assert is_clique(complete_graph(4), range(4))
    assert not is_clique(cycle_graph(7), {0, 2})
    assert is_clique(cycle_graph(7), {3})
    assert is_clique(cycle_graph(7), set())


def test_are_joined_examples():
    assert are_joined(complete_graph(2), {0}, {1}) is UniformStatus.JOIN
    assert are_joined(empty_graph(2), {0}, {1}) is UniformStatus.COJOIN
    P3 = make_graph(3, [(0, 1), (1, 2)])
    assert are_joined(P3, {0, 2}, {1}) is UniformStatus.JOIN
    assert are_joined(P3, {0}, {1, 2}) is UniformStatus.MIXED


def test_are_joined_rejects_overlap_and_empty():
    with pytest.raises(GraphError):
        are_joined(cycle_graph(5), {0, 1}, {1, 2})
    with pytest.raises(GraphError):
        are_joined(cycle_graph(5), set(), {1})


def test_join_and_union_sizes():
    G = join(complete_graph(2), cycle_graph(5))
    assert G.n == 7 and G.m == 1 + 5 + 10
    H = disjoint_union(cycle_graph(3), cycle_graph(4))
    assert H.m == 7 and len(components(H)) == 2


@given(graphs())
def test_symmetric_and_loopless(G):
    for v in G.vertices:
        assert not G.has_edge(v, v)
        for u in G.vertices:
            assert G.has_edge(u, v) == G.has_edge(v, u)


@given(graphs())
def test_complement_involution(G):
    assert G.complement().complement() == G
    assert G.m + G.complement().m == G.n * (G.n - 1) // 2


@given(graphs(min_n=1))
def test_components_partition(G):
    comps = components(G)
    total = 0
    for c in comps:
        assert total & c == 0
        total |= c
    assert total == G.full_mask
