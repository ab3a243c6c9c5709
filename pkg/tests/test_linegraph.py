from itertools import combinations
from math import comb, prod

import networkx as nx
import pytest
from hypothesis import given, settings

from sgline import (
    CircleCapExceeded,
    Graph,
    NotSimple,
    SignedGraph,
    VertexSignedGraph,
    is_consistent_bruteforce,
    is_line_consistent_oracle,
    line_graph,
)
from sgline.core import path_vertices
from strategies import signed_multigraphs

K4 = Graph(4, [(e, u, v) for e, (u, v) in enumerate(combinations(range(4), 2))])
TRIANGLE = Graph(3, [(0, 0, 1), (1, 1, 2), (2, 2, 0)])


def nx_line_consistent(s: SignedGraph) -> bool:
    """Independent referee: networkx line graph and simple-cycle listing."""
    g = nx.Graph()
    g.add_edges_from(((u, v, {"id": e}) for e, u, v in s.edges))
    lg = nx.line_graph(g)
    sign = {}
    for a, b in lg.nodes:
        sign[(a, b)] = s.sign[g.edges[a, b]["id"]]
    for cyc in nx.simple_cycles(lg):
        if len(cyc) >= 3 and prod(sign[v] for v in cyc) < 0:
            return False
    return True


def test_p3_line_graph():
    s = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, -1)])
    res = line_graph(s)
    assert res.lg.graph.edges == ((0, 0, 1),)
    assert res.lg.vsign == (1, -1)
    assert res.vertex_origin == (0, 1)


def test_triangle_line_graph():
    res = line_graph(SignedGraph(TRIANGLE, {0: 1, 1: 1, 2: 1}))
    assert res.lg.graph.n_edges == 3 and set(res.lg.vsign) == {1}


def test_star_line_graph_is_triangle():
    s = SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, -1), (0, 3, -1)])
    res = line_graph(s)
    assert sorted(res.lg.graph.degrees) == [2, 2, 2]
    assert res.lg.vsign == (1, -1, -1)


def test_line_graph_rejects_multigraphs():
    with pytest.raises(NotSimple):
        line_graph(SignedGraph.from_edges(1, [(0, 0, 1)]))
    with pytest.raises(NotSimple):
        line_graph(SignedGraph.from_edges(2, [(0, 1, 1), (0, 1, 1)]))


@pytest.mark.parametrize("vsign, consistent", [((1, 1, 1), True), ((1, 1, -1), False), ((1, -1, -1), True)])
def test_bruteforce_triangle(vsign, consistent):
    res = is_consistent_bruteforce(VertexSignedGraph(TRIANGLE, vsign), 10)
    assert res.consistent == consistent
    if not consistent:
        assert res.witness.edge_set == {0, 1, 2}


def test_oracle_examples():
    assert is_line_consistent_oracle(SignedGraph(K4, {e: 1 for e in K4.edge_ids}))
    one_negative = {e: 1 for e in K4.edge_ids}
    one_negative[0] = -1
    assert not is_line_consistent_oracle(SignedGraph(K4, one_negative))
    c4 = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (3, 0, 1)])
    assert is_line_consistent_oracle(c4)


def test_oracle_cap():
    # Two adjacent negative vertices hung off a K7: consistent, yet every
    # circle through them has to be examined.
    pairs = list(combinations(range(7), 2)) + [(0, 7), (7, 8), (8, 1)]
    g = Graph(9, [(e, u, v) for e, (u, v) in enumerate(pairs)])
    vg = VertexSignedGraph(g, (1,) * 7 + (-1, -1))
    assert is_consistent_bruteforce(vg, 100_000).consistent
    with pytest.raises(CircleCapExceeded):
        is_consistent_bruteforce(vg, 50)


@given(signed_multigraphs(max_vertices=7, max_edges=12, simple=True))
def test_line_graph_shape(s):
    res = line_graph(s)
    lg = res.lg.graph
    assert lg.n_vertices == s.graph.n_edges
    assert lg.n_edges == sum(comb(d, 2) for d in s.graph.degrees)
    for i, e in enumerate(res.vertex_origin):
        assert res.lg.vsign[i] == s.sign[e]
    if s.graph.n_components() - sum(d == 0 for d in s.graph.degrees) == 1 and s.graph.n_edges >= 2:
        assert lg.n_components() == 1


@settings(max_examples=200)
@given(signed_multigraphs(max_vertices=6, max_edges=9, simple=True))
def test_oracle_matches_networkx_cycles(s):
    res = is_consistent_bruteforce(line_graph(s).lg, 1_000_000)
    assert res.consistent == nx_line_consistent(s)
    if not res.consistent:
        lg = line_graph(s).lg
        verts = path_vertices(lg.graph, res.witness)[:-1]
        assert prod(lg.vsign[v] for v in verts) == -1
