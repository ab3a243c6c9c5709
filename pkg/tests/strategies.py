"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from sgline import Graph, SignedGraph


@st.composite
def signed_multigraphs(draw, max_vertices=7, max_edges=12, simple=False):
    n = draw(st.integers(1, max_vertices))
    if simple:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
        edges = [(e, u, v) for e, (u, v) in enumerate(chosen)]
    else:
        m = draw(st.integers(0, max_edges))
        ids = draw(st.lists(st.integers(0, 50), min_size=m, max_size=m, unique=True))
        edges = [(e, draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))) for e in ids]
    sign = {e: draw(st.sampled_from((1, -1))) for e, _, _ in edges}
    return SignedGraph(Graph(n, edges), sign)


def graphs(**kw):
    return signed_multigraphs(**kw).map(lambda s: s.graph)
