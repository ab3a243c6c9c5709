import pytest
from hypothesis import given

from sgline import (
    CIRCLE,
    CLOSED,
    OPEN,
    Graph,
    ParseError,
    PathElement,
    SignedGraph,
    VertexSignedGraph,
    negative_subgraph,
    parse_signed_graph,
    parse_vertex_signed_graph,
    path_sign,
    path_vertices,
    serialize_signed_graph,
    serialize_vertex_signed_graph,
)
from sgline.exceptions import InvalidPath, UnknownEdge
from strategies import signed_multigraphs


def test_parse_single_negative_edge():
    s = parse_signed_graph("vertices 2\nedge 0 0 1 -")
    assert s.n_vertices == 2
    assert s.edges == ((0, 0, 1),)
    assert s.sign[0] == -1


def test_parse_loop():
    s = parse_signed_graph(b"vertices 1\nedge 0 0 0 +\n")
    assert s.graph.is_loop(0)
    assert s.sign[0] == 1
    assert s.degree(0) == 2


def test_parse_parallel_opposite_signs():
    s = parse_signed_graph("vertices 2\nedge 0 0 1 +\nedge 1 0 1 -")
    assert not s.is_simple()
    assert [s.sign[e] for e in (0, 1)] == [1, -1]


def test_parse_comments_and_order():
    text = "# a comment\nvertices 3\n\nedge 5 1 2 +\n# mid\nedge 2 0 1 -\n"
    s = parse_signed_graph(text)
    assert s.graph.edge_ids == [2, 5]
    assert serialize_signed_graph(s) == "vertices 3\nedge 2 0 1 -\nedge 5 1 2 +\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices 2\nedge 0 0 1", 2),
        ("vertices 2\nedge 0 0 1 +\nedge 0 1 0 -", 3),
        ("vertices 2\nedge 0 0 2 +", 2),
        ("vertices 2\nedge x 0 1 +", 2),
        ("vertices 2\nedge 0 0 1 *", 2),
        ("vertex 2", 1),
        ("", 1),
    ],
)
def test_parse_errors_name_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_signed_graph(text)
    assert info.value.line == line


def test_negative_subgraph_examples():
    tri = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    neg = negative_subgraph(tri)
    assert neg.n_vertices == 3 and neg.n_edges == 0

    c4 = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (3, 0, 1)])
    neg = negative_subgraph(c4)
    assert neg.edge_ids == [0, 1]
    assert neg.degrees == (1, 2, 1, 0)

    loop = SignedGraph.from_edges(1, [(0, 0, -1)])
    assert negative_subgraph(loop).edges == ((0, 0, 0),)


def test_path_sign():
    s = SignedGraph.from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, -1)])
    assert path_sign(s, PathElement(OPEN, (0, 1, 2), (0, 3))) == -1
    t = SignedGraph.from_edges(3, [(0, 1, -1), (1, 2, -1)])
    assert path_sign(t, PathElement(OPEN, (0, 1), (0, 2))) == 1
    with pytest.raises(UnknownEdge):
        path_sign(t, PathElement(OPEN, (7,), (0, 1)))


def test_path_element_invariants():
    with pytest.raises(ValueError):
        PathElement(OPEN, ())
    with pytest.raises(ValueError):
        PathElement(OPEN, (0, 0), (0, 1))
    with pytest.raises(ValueError):
        PathElement(CIRCLE, (0,), (0,))
    with pytest.raises(ValueError):
        PathElement(CLOSED, (0, 1), (0, 1))
    assert PathElement(CLOSED, (0, 1, 2), (3,)).termini == (3, 3)


def test_path_vertices_and_rejections():
    g = Graph(4, [(0, 0, 1), (1, 1, 2), (2, 2, 0), (3, 2, 3)])
    assert path_vertices(g, PathElement(CIRCLE, (0, 1, 2))) == [0, 1, 2, 0]
    assert path_vertices(g, PathElement(OPEN, (1, 3), (1, 3))) == [1, 2, 3]
    with pytest.raises(InvalidPath):
        path_vertices(g, PathElement(OPEN, (0, 3), (0, 3)))
    with pytest.raises(InvalidPath):
        path_vertices(g, PathElement(CIRCLE, (0, 1)))


def test_closed_path_walk():
    g = Graph(3, [(0, 0, 1), (1, 1, 2), (2, 2, 0)])
    assert path_vertices(g, PathElement(CLOSED, (0, 1, 2), (0,))) == [0, 1, 2, 0]


def test_canonical_circle_rotation():
    c = PathElement(CIRCLE, (5, 2, 7, 3)).canonical()
    assert c.edge_seq == (2, 5, 3, 7)
    assert PathElement(CIRCLE, (2, 7, 3, 5)).canonical() == c


def test_vertex_signed_round_trip():
    vg = VertexSignedGraph(Graph(3, [(0, 0, 1), (1, 1, 2)]), (1, -1, 1))
    text = serialize_vertex_signed_graph(vg)
    assert text == "vertices 3\nvsign 0 +\nvsign 1 -\nvsign 2 +\nedge 0 0 1\nedge 1 1 2\n"
    assert parse_vertex_signed_graph(text) == vg
    with pytest.raises(ParseError):
        parse_vertex_signed_graph("vertices 2\nvsign 0 +\nedge 0 0 1")


@given(signed_multigraphs())
def test_handshake(s):
    assert sum(s.graph.degrees) == 2 * s.graph.n_edges


@given(signed_multigraphs())
def test_serialize_parse_identity(s):
    text = serialize_signed_graph(s)
    back = parse_signed_graph(text)
    assert back == s
    assert serialize_signed_graph(back) == text


@given(signed_multigraphs())
def test_negative_degree_matches_negative_subgraph(s):
    neg = negative_subgraph(s)
    for v in range(s.n_vertices):
        assert s.negative_degree(v) == neg.degrees[v] <= s.degree(v)
