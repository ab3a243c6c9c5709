"""The naturally vertex-signed line graph and the brute-force consistency oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import NamedTuple, Optional

from .core import CIRCLE, Graph, PathElement, SignedGraph, VertexSignedGraph, path_vertices
from .exceptions import CircleCapExceeded, NotSimple
from .structure import blocks

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class LineGraphResult:
    lg: VertexSignedGraph
    vertex_origin: tuple  # lg vertex -> original edge id


class ConsistencyResult(NamedTuple):
    consistent: bool
    witness: Optional[PathElement] = None


def line_graph(s: SignedGraph) -> LineGraphResult:
    """Line graph of a simple signed graph, vertices signed by the edge signs.

    Line-graph vertex ``i`` is the ``i``-th smallest edge id; line-graph
    edges are numbered by the sorted pairs of incident original edges.
    """
    if not s.is_simple():
        raise NotSimple("line graphs are only built for simple graphs")
    origin = tuple(s.graph.edge_ids)
    index = {e: i for i, e in enumerate(origin)}
    pairs = set()
    for inc in s.graph.incidence:
        for a, b in combinations(inc, 2):
            pairs.add((index[a], index[b]))
    edges = [(k, a, b) for k, (a, b) in enumerate(sorted(pairs))]
    lg = VertexSignedGraph(Graph(len(origin), edges), tuple(s.sign[e] for e in origin))
    return LineGraphResult(lg, origin)


def is_consistent_bruteforce(vg: VertexSignedGraph, cap: int = DEFAULT_CAP) -> ConsistencyResult:
    """Exhaustively search for a circle whose vertex-sign product is negative.

    Circles avoiding every negative vertex have product +1, so only circles
    through a negative vertex are examined.  Each is generated once, rooted at
    its smallest negative vertex, inside the block that contains it.  ``cap``
    bounds the number of circles examined.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    g = vg.graph
    negative = [v for v in range(g.n_vertices) if vg.vsign[v] < 0]
    if not negative:
        return ConsistencyResult(True)
    seen = 0
    for b in blocks(g).nontrivial_blocks:
        roots = sorted(v for v in b.vertices if vg.vsign[v] < 0)
        if not roots:
            continue
        adj = {}
        for e in sorted(b.edges):
            u, v = g.ends(e)
            adj.setdefault(u, []).append((e, v))
            if u != v:
                adj.setdefault(v, []).append((e, u))
        # Positive neighbours first: odd circles tend to turn up early.
        for nbrs in adj.values():
            nbrs.sort(key=lambda ew: (vg.vsign[ew[1]] < 0, ew[0]))
        banned = set()
        for r in roots:
            for c in _circles_through(adj, r, banned):
                seen += 1
                if seen > cap:
                    raise CircleCapExceeded(cap)
                verts = path_vertices(g, c)[:-1]
                if prod(vg.vsign[v] for v in verts) < 0:
                    return ConsistencyResult(False, c)
            banned.add(r)
    return ConsistencyResult(True)


def _circles_through(adj, r, banned):
    """Circles through ``r`` avoiding ``banned``; each reported in one direction."""
    seq = []
    on_path = {r}
    stack = [(r, iter(adj.get(r, ())))]
    while stack:
        v, it = stack[-1]
        for e, w in it:
            if seq and e == seq[-1]:
                continue
            if w == r:
                # Loops at r, and one direction of every longer circle.
                if not seq or seq[0] < e:
                    yield PathElement(CIRCLE, tuple(seq) + (e,))
                continue
            if w in on_path or w in banned:
                continue
            seq.append(e)
            on_path.add(w)
            stack.append((w, iter(adj[w])))
            break
        else:
            stack.pop()
            if seq:
                seq.pop()
                on_path.discard(v)


def is_line_consistent_oracle(s: SignedGraph, cap: int = DEFAULT_CAP) -> bool:
    return is_consistent_bruteforce(line_graph(s).lg, cap).consistent
