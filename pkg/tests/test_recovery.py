import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgline import CIRCLE, OPEN, Graph, PathElement, PropertyViolated, SignedGraph, property3_local
from sgline import recover_plan, round_trip_check
from sgline.constructions import PlanB, apply_plan_a, apply_plan_b, sample_plan_a, sample_plan_b, validate_plan_b
from sgline.generators import random_sparse_graph
from strategies import signed_multigraphs

K4 = Graph(4, [(e, u, v) for e, (u, v) in enumerate(combinations(range(4), 2))])
THETA = Graph(2, [(0, 0, 1), (1, 0, 1), (2, 0, 1)])


def relabel(s: SignedGraph, rng: random.Random) -> SignedGraph:
    """Same signed graph under shuffled vertex indices and edge ids."""
    perm = list(range(s.n_vertices))
    rng.shuffle(perm)
    ids = rng.sample(range(3 * s.graph.n_edges + 1), s.graph.n_edges)
    edges = [(ids[i], perm[u], perm[v]) for i, (e, u, v) in enumerate(s.edges)]
    sign = {ids[i]: s.sign[e] for i, (e, _, _) in enumerate(s.edges)}
    return SignedGraph(Graph(s.n_vertices, edges), sign)


def test_c4_recovers_to_positive_loop():
    s = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (3, 0, 1)])
    p = recover_plan(s)
    assert p.base == Graph(1, [(0, 0, 0)])
    assert p.base_signed.sign == {0: 1}
    assert p.f_prime == {0}
    assert p.d_prime == (PathElement(CIRCLE, (0,)),)
    assert p.lengths == {0: 4}
    assert p.sign_seqs == {0: (-1, -1, 1, 1)}
    assert apply_plan_b(p) == s


def test_all_positive_k4():
    s = SignedGraph(K4, {e: 1 for e in K4.edge_ids})
    p = recover_plan(s)
    assert p.base_signed == s
    assert p.f_prime == frozenset() and p.d_prime == ()
    assert set(p.lengths.values()) == {1}


def test_theta_branch():
    sigma = SignedGraph(THETA, {0: -1, 1: 1, 2: 1})
    plan = PlanB(sigma, frozenset({0}), (PathElement(OPEN, (0,), (0, 1)),), {0: 3}, {0: (1, -1, 1)})
    s = apply_plan_b(plan)
    back = recover_plan(s)
    assert back == plan
    assert back.d_prime[0].kind == OPEN and back.f_prime == {0}


def test_refuses_graphs_failing_the_local_property():
    s = SignedGraph(K4, {e: -1 if e == 0 else 1 for e in K4.edge_ids})
    with pytest.raises(PropertyViolated) as info:
        recover_plan(s)
    assert sorted(v.vertex for v in info.value.violations) == [0, 1]
    with pytest.raises(PropertyViolated):
        round_trip_check(s)


def test_sampled_plans_recover_exactly():
    for seed in range(300):
        p = sample_plan_b(seed)
        assert recover_plan(apply_plan_b(p)) == p


@settings(max_examples=200)
@given(st.integers(0, 10**6))
def test_round_trip_after_relabelling(seed):
    rng = random.Random(seed)
    s = relabel(apply_plan_b(sample_plan_b(seed)), rng)
    assert round_trip_check(s)
    assert validate_plan_b(recover_plan(s)) == []


@settings(max_examples=200)
@given(signed_multigraphs(max_vertices=8, max_edges=12))
def test_every_locally_good_graph_round_trips(s):
    if property3_local(s).ok:
        p = recover_plan(s)
        assert validate_plan_b(p) == []
        assert round_trip_check(s)
    else:
        with pytest.raises(PropertyViolated):
            recover_plan(s)


@given(st.integers(0, 10**6))
def test_construction_a_outputs_round_trip(seed):
    rng = random.Random(seed)
    s = apply_plan_a(sample_plan_a(random_sparse_graph(rng, 9, 4), seed))
    assert round_trip_check(s)
