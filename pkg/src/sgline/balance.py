"""Balance of signed graphs, decided two independent ways."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import CIRCLE, Graph, PathElement, SignedGraph, path_sign
from .exceptions import InternalInconsistency
from .structure import blocks, suppress_divalent


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    witness_cut: Optional[frozenset] = None
    witness_circle: Optional[PathElement] = None


def is_balanced_switching(s: SignedGraph) -> BalanceReport:
    """Two-colour each component so that negative edges join unlike colours.

    On failure the witness is the fundamental circle of the first edge (by id)
    that breaks the colouring; it always has negative sign.
    """
    g = s.graph
    n = g.n_vertices
    adj = [[] for _ in range(n)]
    for e, u, v in g.edges:
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))
    color = [0] * n
    parent = [None] * n  # (edge, parent vertex)
    depth = [0] * n
    for root in range(n):
        if color[root]:
            continue
        color[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e, w in adj[v]:
                if color[w]:
                    continue
                color[w] = color[v] * s.sign[e]
                parent[w] = (e, v)
                depth[w] = depth[v] + 1
                queue.append(w)

    for e, u, v in g.edges:
        if color[u] * color[v] != s.sign[e]:
            return BalanceReport(False, witness_circle=_fundamental_circle(e, u, v, parent, depth))

    if not s.negative_edges:
        return BalanceReport(True)
    # Roots are the smallest vertex of each component and are coloured +1.
    x = frozenset(v for v in range(n) if color[v] < 0)
    return BalanceReport(True, witness_cut=x)


def _fundamental_circle(e, u, w, parent, depth):
    if u == w:
        return PathElement(CIRCLE, (e,))
    up_u, up_w = [], []
    a, b = u, w
    while a != b:
        if depth[a] >= depth[b]:
            pe, a = parent[a]
            up_u.append(pe)
        else:
            pe, b = parent[b]
            up_w.append(pe)
    return PathElement(CIRCLE, (e, *up_u, *reversed(up_w)))


def is_balanced_cut(s: SignedGraph) -> bool:
    """True iff the negative edges are empty or exactly the cut of some vertex set.

    Candidate side assignment: contract positive edges, then greedily
    two-colour the quotient along negative edges.  The candidate is then
    checked edge by edge.
    """
    g = s.graph
    if not s.negative_edges:
        return True
    parent = list(range(g.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, u, v in g.edges:
        if s.sign[e] > 0:
            parent[find(u)] = find(v)
    quotient = {}
    for e, u, v in g.edges:
        if s.sign[e] < 0:
            a, b = find(u), find(v)
            quotient.setdefault(a, []).append(b)
            quotient.setdefault(b, []).append(a)
    side = {}
    for start in sorted(quotient):
        if start in side:
            continue
        side[start] = False
        stack = [start]
        while stack:
            a = stack.pop()
            for b in quotient[a]:
                if b not in side:
                    side[b] = not side[a]
                    stack.append(b)
    in_x = [side.get(find(v), False) for v in range(g.n_vertices)]
    return all((in_x[u] != in_x[v]) == (s.sign[e] < 0) for e, u, v in g.edges)


def is_balanced(s: SignedGraph) -> BalanceReport:
    report = is_balanced_switching(s)
    if report.balanced != is_balanced_cut(s):
        raise InternalInconsistency("switching and cut balance tests disagree")
    return report


def cut_edges(g: Graph, x) -> frozenset:
    x = set(x)
    return frozenset(e for e, u, v in g.edges if (u in x) != (v in x))


def check_balance_report(s: SignedGraph, report: BalanceReport) -> bool:
    """Re-verify a report's certificate from the signed graph alone."""
    if report.balanced:
        if not s.negative_edges:
            return report.witness_cut is None
        return cut_edges(s.graph, report.witness_cut) == s.negative_edges
    c = report.witness_circle
    return c is not None and path_sign(s, c) == -1


def block_signed_graph(s: SignedGraph, edge_ids) -> SignedGraph:
    """The signed subgraph formed by ``edge_ids`` on its own vertices, relabelled in order."""
    keep = sorted(edge_ids)
    verts = sorted({x for e in keep for x in s.graph.ends(e)})
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(e, relabel[s.graph.ends(e)[0]], relabel[s.graph.ends(e)[1]]) for e in keep]
    return SignedGraph(Graph(len(verts), edges), {e: s.sign[e] for e in keep})


def balanced_per_block_after_suppression(s: SignedGraph) -> bool:
    """Balance decided block by block on the suppressed blocks.

    In each nontrivial block, divalent vertices (degree measured inside the
    block) are suppressed and the remaining negative edges must be empty or a
    cut.  Trivial blocks are always balanced.
    """
    for b in blocks(s.graph).nontrivial_blocks:
        reduced = suppress_divalent(block_signed_graph(s, b.edges)).reduced
        if not is_balanced_cut(reduced):
            return False
    return True
