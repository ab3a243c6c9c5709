from itertools import combinations

from hypothesis import given, settings

from sgline import (
    Graph,
    SignedGraph,
    balanced_per_block_after_suppression,
    enumerate_circles,
    is_balanced,
    is_balanced_cut,
    is_balanced_switching,
    suppress_divalent,
)
from sgline.balance import check_balance_report, cut_edges
from sgline.constructions import apply_plan_a, sample_plan_a
from sgline.core import path_sign
from strategies import graphs, signed_multigraphs

K4 = Graph(4, [(e, u, v) for e, (u, v) in enumerate(combinations(range(4), 2))])


def test_all_positive_k4():
    rep = is_balanced_switching(SignedGraph(K4, {e: 1 for e in K4.edge_ids}))
    assert rep.balanced
    assert not rep.witness_cut
    assert rep.witness_circle is None


def test_triangle_one_negative():
    s = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, -1), (2, 0, 1)])
    rep = is_balanced_switching(s)
    assert not rep.balanced
    assert rep.witness_circle.edge_set == {0, 1, 2}
    assert path_sign(s, rep.witness_circle) == -1
    assert not is_balanced_cut(s)


def test_c4_alternating():
    s = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 0, 1)])
    rep = is_balanced(s)
    assert rep.balanced
    assert rep.witness_cut == frozenset({1, 2})
    assert cut_edges(s.graph, rep.witness_cut) == s.negative_edges
    assert all(path_sign(s, c) == 1 for c in enumerate_circles(s.graph, 10))


def test_negative_isthmus_in_tree():
    s = SignedGraph.from_edges(4, [(0, 1, 1), (1, 2, -1), (1, 3, 1)])
    assert is_balanced_cut(s)
    assert is_balanced(s).witness_cut == frozenset({2})


def test_negative_loop():
    s = SignedGraph.from_edges(2, [(0, 1, 1), (1, 1, -1)])
    rep = is_balanced_switching(s)
    assert not rep.balanced
    assert rep.witness_circle.edge_seq == (1,)
    assert not is_balanced_cut(s)


def test_witness_excludes_smallest_vertex():
    s = SignedGraph.from_edges(3, [(0, 1, -1), (1, 2, -1)])
    assert 0 not in is_balanced(s).witness_cut


@settings(max_examples=300)
@given(signed_multigraphs(max_vertices=7, max_edges=10))
def test_switching_cut_and_circles_agree(s):
    rep = is_balanced_switching(s)
    assert rep.balanced == is_balanced_cut(s)
    assert check_balance_report(s, rep)
    circles = enumerate_circles(s.graph, 100_000)
    assert rep.balanced == all(path_sign(s, c) == 1 for c in circles)


@given(signed_multigraphs(max_vertices=8, max_edges=14))
def test_balance_survives_suppression(s):
    assert is_balanced(s).balanced == is_balanced(suppress_divalent(s).reduced).balanced


@settings(max_examples=150)
@given(graphs(max_vertices=8, max_edges=12))
def test_per_block_rule_on_construction_a_outputs(g):
    for seed in range(3):
        s = apply_plan_a(sample_plan_a(g, seed))
        assert balanced_per_block_after_suppression(s) == is_balanced(s).balanced
