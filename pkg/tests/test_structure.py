"""Neighbourhood partitions around C7 and C5 holes and their audits.

Hole positions in the helpers below are 1-based, as in the display names.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holeforge.c5 import audit_c5, build_c5_partition
from holeforge.c7 import audit_c7, build_c7_partition, c7_uniform_sets
from holeforge.detection import Pattern, class_report, find_induced
from holeforge.generate import random_in_class
from holeforge.graph import are_joined, cycle_graph, is_clique, make_graph
from holeforge.structure import HoleEmbedding, StructureError, UnclassifiableVertex, near_uniform_from_sets

import oracles


def hole_plus(k, *extra, edges=()):
    """C_k on 0..k-1 plus one vertex per entry of ``extra`` (1-based hole positions)."""
    E = [(i, (i + 1) % k) for i in range(k)]
    for j, nbrs in enumerate(extra):
        E += [(k + j, p - 1) for p in nbrs]
    E += list(edges)
    return make_graph(k + len(extra), E)


H7 = HoleEmbedding(tuple(range(7)))
H5 = HoleEmbedding(tuple(range(5)))


def nonempty(P):
    return {name: set(s) for name, s in P.named_sets() if s}


# --- C7 -------------------------------------------------------------------


def test_x1_vertex():
    assert nonempty(build_c7_partition(hole_plus(7, {1, 2, 3}), H7)) == {"X1": {7}}


def test_y1_vertex():
    assert nonempty(build_c7_partition(hole_plus(7, {1, 2, 5}), H7)) == {"Y1": {7}}


def test_w_vertex():
    assert nonempty(build_c7_partition(hole_plus(7, range(1, 8)), H7)) == {"W": {7}}


def test_z_vertex():
    assert nonempty(build_c7_partition(hole_plus(7, {3, 4, 5, 6, 7}), H7)) == {"Z3": {7}}


def test_two_vertex_unclassifiable_with_4k1():
    G = hole_plus(7, {1, 2})
    with pytest.raises(UnclassifiableVertex) as exc:
        build_c7_partition(G, H7)
    w = exc.value.witness
    assert w.pattern is Pattern.FOUR_K1 and w.verify(G)
    # v with hole vertices 3, 5, 7
    assert set(w.vertices) == {7, 2, 4, 6}


def test_audit_single_x1_passes():
    G = hole_plus(7, {1, 2, 3})
    assert audit_c7(G, build_c7_partition(G, H7)).ok


def test_audit_x1_y3_edge_fails_claim_e():
    G = hole_plus(7, {1, 2, 3}, {3, 4, 7}, edges=[(7, 8)])
    report = audit_c7(G, build_c7_partition(G, H7))
    assert not report["e"].passed
    assert set(report["e"].witness) == {7, 8}
    assert {r.claim for r in report.failures()} >= {"e"}
    # the same graph contains the C4 x, y, h7, h1
    c4 = find_induced(G, Pattern.C4)
    assert c4 is not None and not class_report(G).member
    assert oracles.induces(oracles.edge_set(G), oracles.cycle_edges(4), 4, (7, 8, 6, 0))


def test_uniform_sets_bare_c7():
    part = c7_uniform_sets(cycle_graph(7))
    assert part.k == 7 and part.uniform
    for i in range(7):
        for j in range(i + 1, 7):
            joined = part.join_matrix[(i, j)].value == "join"
            assert joined == cycle_graph(7).has_edge(i, j)


def test_uniform_sets_with_w():
    G = hole_plus(7, range(1, 8))
    part = c7_uniform_sets(G, H7)
    assert part.k == 8
    w = part.names.index("W")
    assert all(part.join_matrix[tuple(sorted((w, i)))].value == "join" for i in range(7))


@pytest.mark.parametrize("seed", range(25))
def test_random_c7_partition_and_matrix(seed):
    G = random_in_class(12, seed, require="c7")
    H = HoleEmbedding.from_embedding(find_induced(G, Pattern.C7))
    P = build_c7_partition(G, H)
    covered = set(H.vertices)
    for _, s in P.named_sets():
        assert not covered & s
        covered |= s
    assert covered == set(range(G.n))
    assert audit_c7(G, P).ok
    part = c7_uniform_sets(G, H)
    assert part.problems(G) == []
    for (a, b), status in part.join_matrix.items():
        assert are_joined(G, part.sets[a], part.sets[b]) is status


def test_near_uniform_rejects_two_mixed_pairs():
    P3 = make_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(StructureError, match="more than one"):
        near_uniform_from_sets(make_graph(4, [(0, 1), (2, 3)]), [{0}, {1, 2}, {3}], ["a", "b", "c"])
    part = near_uniform_from_sets(P3, [{0}, {1, 2}], ["a", "b"])
    assert part.nonuniform_pair == (0, 1) and all(is_clique(P3, s) for s in part.sets)


# --- C5 -------------------------------------------------------------------


def test_f1_t3_r():
    assert nonempty(build_c5_partition(hole_plus(5, {1}), H5)) == {"F1": {5}}
    assert nonempty(build_c5_partition(hole_plus(5, {3, 4}), H5)) == {"T3": {5}}
    assert nonempty(build_c5_partition(hole_plus(5, set()), H5)) == {"R": {5}}
    assert nonempty(build_c5_partition(hole_plus(5, range(1, 6)), H5)) == {"W": {5}}


def test_audit_f1_t3_passes():
    G = hole_plus(5, {1}, {3, 4}, edges=[(5, 6)])
    report = audit_c5(G, build_c5_partition(G, H5))
    assert report.ok
    assert report["d"].passed


def test_audit_t1_t2_edge_fails_claim_g():
    G = hole_plus(5, {1, 2}, {2, 3}, edges=[(5, 6)])
    report = audit_c5(G, build_c5_partition(G, H5))
    assert not report["g"].passed and set(report["g"].witness) == {5, 6}
    c6 = (5, 6, 2, 3, 4, 0)  # t, t', 3, 4, 5, 1
    assert oracles.induces(oracles.edge_set(G), oracles.cycle_edges(6), 6, c6)
    assert class_report(G).witnesses[Pattern.C6] is not None


@pytest.mark.parametrize("seed", range(25))
def test_random_c5_audit(seed):
    G = random_in_class(11, seed, require="c5")
    H = HoleEmbedding.from_embedding(find_induced(G, Pattern.C5))
    assert audit_c5(G, build_c5_partition(G, H)).ok


@given(st.integers(0, 10**6), st.sampled_from(["c5", "c7"]))
@settings(max_examples=30)
def test_every_hole_audits(seed, kind):
    G = random_in_class(10, seed, require=kind)
    if G is None:
        return
    pattern, build, audit = (
        (Pattern.C7, build_c7_partition, audit_c7) if kind == "c7" else (Pattern.C5, build_c5_partition, audit_c5)
    )
    from holeforge.detection import iter_induced

    for e in list(iter_induced(G, pattern))[:5]:
        assert audit(G, build(G, HoleEmbedding.from_embedding(e))).ok


def test_hole_indexing_wraps():
    H = HoleEmbedding((3, 1, 4, 0, 2))
    assert H[5] == 3 and H[-1] == 2
    assert H.verify(make_graph(5, [(3, 1), (1, 4), (4, 0), (0, 2), (2, 3)]))
