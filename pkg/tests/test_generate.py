import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holeforge.c7 import audit_c7, build_c7_partition
from holeforge.detection import Pattern, class_report, find_induced
from holeforge.generate import (
    InvalidTemplateSpec,
    TemplateSpec,
    Unrealizable,
    c7_template,
    canonical_form,
    enumerate_small,
    from_canonical,
    glue_on_clique,
    permute,
    random_extension,
    random_in_class,
    template_sets,
)
from holeforge.graph import GraphError, cycle_graph, make_graph
from holeforge.structure import HoleEmbedding

import oracles
from conftest import graphs

Z7 = (0,) * 7

# Labelled (4K1, C4, C6)-free graphs on 4 vertices: 64 minus the edgeless
# graph and the three labelled 4-cycles.  Recomputed below by the naive oracle.
IN_CLASS_LABELLED_4 = 60
IN_CLASS_UNLABELLED_4 = 9


def test_n7_c7_is_the_cycle():
    G = random_in_class(7, 0, require="c7")
    assert G.m == 7 and find_induced(G, Pattern.C7) is not None


def test_seed_determinism():
    assert random_in_class(12, 42, require="c5") == random_in_class(12, 42, require="c5")
    assert random_in_class(12, 42) != random_in_class(12, 43)


def test_too_small_for_hole():
    assert random_in_class(4, 0, require="c7") is None


def test_cap_enforced():
    with pytest.raises(GraphError):
        random_in_class(17, 0)


@given(st.integers(0, 10**6), st.integers(1, 12), st.sampled_from([None, "c5", "c7"]), st.booleans())
@settings(max_examples=40)
def test_outputs_are_in_class(seed, n, require, twin_free):
    G = random_in_class(n, seed, require=require, twin_free=twin_free)
    if G is None:
        assert require is not None and n < {"c5": 5, "c7": 7}[require]
        return
    r = class_report(G)
    assert G.n == n and r.member
    if require == "c5":
        assert r.c5_present
    if require == "c7":
        assert r.c7_present
    if twin_free:
        assert not r.c5twin_present


def test_random_extension_keeps_seed_structure():
    seed_graph = make_graph(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (6, 2), (6, 3), (5, 6)])
    G = random_extension(seed_graph, 10, 3, twin_free=True)
    r = class_report(G)
    assert G.n == 10 and r.member and r.c5_present and not r.c5twin_present


def test_permute_is_isomorphism():
    G = cycle_graph(5)
    H = permute(G, [2, 0, 4, 1, 3])
    assert H.m == 5 and canonical_form(H) == canonical_form(G)


def test_glue_shares_clique():
    import random

    A, B = cycle_graph(7), cycle_graph(5)
    G = glue_on_clique(A, B, 2, random.Random(0))
    assert G.n == 10 and G.m == 11


def test_template_x1():
    G = c7_template(TemplateSpec(X=(1, 0, 0, 0, 0, 0, 0)))
    assert G.n == 8
    assert audit_c7(G, build_c7_partition(G, HoleEmbedding(tuple(range(7))))).ok


def test_template_w2_decided_by_class_check():
    spec = TemplateSpec(W=2)
    try:
        G = c7_template(spec)
    except Unrealizable as exc:
        assert exc.witness.pattern in (Pattern.FOUR_K1, Pattern.C4, Pattern.C6)
        return
    assert class_report(G).member
    assert all(G.has_edge(w, h) for w in (7, 8) for h in range(7)) and G.has_edge(7, 8)


def test_template_rejects_adjacent_y():
    with pytest.raises(InvalidTemplateSpec):
        c7_template(TemplateSpec(Y=(1, 1, 0, 0, 0, 0, 0)))


@pytest.mark.parametrize("seed", range(40))
def test_template_coverage(seed):
    spec = TemplateSpec.random(seed)
    G = c7_template(spec)
    P = build_c7_partition(G, HoleEmbedding(tuple(range(7))))
    want = template_sets(spec)
    got = {name: s for name, s in P.named_sets() if s}
    assert got == {k: v for k, v in want.items() if v}
    assert audit_c7(G, P).ok


def test_enumerate_n1():
    assert len(list(enumerate_small(1))) == 1


def test_enumerate_n4_frozen():
    assert sum(1 for _ in enumerate_small(4)) == IN_CLASS_LABELLED_4
    assert sum(1 for _ in enumerate_small(4, dedup=True)) == IN_CLASS_UNLABELLED_4


def test_n4_count_from_naive_enumerator():
    assert oracles.count_in_class_labelled(4) == IN_CLASS_LABELLED_4


@pytest.mark.parametrize("n", [2, 3, 5])
def test_enumerate_matches_naive(n):
    assert sum(1 for _ in enumerate_small(n)) == oracles.count_in_class_labelled(n)


def test_enumerate_7_contains_c7():
    target = canonical_form(cycle_graph(7))
    assert any(canonical_form(G) == target for G in enumerate_small(7, dedup=True))


def test_enumerate_too_large():
    with pytest.raises(ValueError):
        list(enumerate_small(8))


@given(graphs(max_n=6), st.randoms())
def test_canonical_form_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert canonical_form(permute(G, perm)) == canonical_form(G)
    H = from_canonical(canonical_form(G))
    assert canonical_form(H) == canonical_form(G)


def test_dedup_counts_distinct_classes():
    codes = {canonical_form(G) for G in enumerate_small(5)}
    assert len(codes) == sum(1 for _ in enumerate_small(5, dedup=True))
    for a, b in itertools.combinations(list(enumerate_small(4, dedup=True)), 2):
        assert canonical_form(a) != canonical_form(b)
