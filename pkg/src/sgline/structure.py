"""Blocks, isthmi, megablocks, circles and suppression of divalent vertices."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Mapping

from .core import CIRCLE, Graph, PathElement, SignedGraph
from .exceptions import CircleCapExceeded


@dataclass(frozen=True)
class Block:
    edges: frozenset
    vertices: frozenset
    nontrivial: bool

    @property
    def is_isthmus(self) -> bool:
        return len(self.edges) == 1 and len(self.vertices) == 2


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    cutpoints: frozenset

    @property
    def nontrivial_flags(self) -> tuple:
        return tuple(b.nontrivial for b in self.blocks)

    @property
    def nontrivial_blocks(self) -> tuple:
        return tuple(b for b in self.blocks if b.nontrivial)

    def block_of_edge(self) -> dict:
        return {e: i for i, b in enumerate(self.blocks) for e in b.edges}


def _biconnected_edge_sets(g: Graph) -> list:
    """Edge sets of the loopless biconnected components (iterative Tarjan)."""
    adj = [[] for _ in range(g.n_vertices)]
    for e, u, v in g.edges:
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))
    disc = [-1] * g.n_vertices
    low = [0] * g.n_vertices
    clock = 0
    comps = []
    for root in range(g.n_vertices):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, None, iter(adj[root]))]
        edge_stack = []
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for e, w in it:
                if e == parent_edge:
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp = []
                    while True:
                        x = edge_stack.pop()
                        comp.append(x)
                        if x == parent_edge:
                            break
                    comps.append(frozenset(comp))
    return comps


def blocks(g: Graph) -> BlockDecomposition:
    """Block decomposition; loops and isolated vertices are blocks of their own.

    A block is nontrivial when it contains a circle, i.e. it is a loop or has
    at least two edges.
    """
    found = []
    for comp in _biconnected_edge_sets(g):
        verts = frozenset(x for e in comp for x in g.ends(e))
        found.append(Block(comp, verts, len(comp) > 1))
    for e, u, v in g.edges:
        if u == v:
            found.append(Block(frozenset([e]), frozenset([u]), True))
    found.sort(key=lambda b: min(b.edges))
    isolated = [v for v in range(g.n_vertices) if g.degrees[v] == 0]
    found += [Block(frozenset(), frozenset([v]), False) for v in isolated]

    count = [0] * g.n_vertices
    for b in found:
        for v in b.vertices:
            count[v] += 1
    cut = frozenset(v for v, c in enumerate(count) if c > 1)
    return BlockDecomposition(tuple(found), cut)


def isthmi(g: Graph) -> frozenset:
    return frozenset(e for b in blocks(g).blocks if b.is_isthmus for e in b.edges)


def megablocks(g: Graph, decomposition: BlockDecomposition | None = None) -> list:
    """Maximal connected unions of nontrivial blocks, as sorted edge sets."""
    dec = decomposition or blocks(g)
    nontriv = list(dec.nontrivial_blocks)
    parent = list(range(len(nontriv)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner = {}
    for i, b in enumerate(nontriv):
        for v in b.vertices:
            if v in owner:
                parent[find(i)] = find(owner[v])
            else:
                owner[v] = i
    groups = {}
    for i, b in enumerate(nontriv):
        groups.setdefault(find(i), set()).update(b.edges)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def iter_circles(g: Graph, decomposition: BlockDecomposition | None = None) -> Iterator[PathElement]:
    """Yield every circle of ``g`` exactly once.

    Each circle is found from its smallest edge ``e0 = st``: we search for
    ``t``-``s`` paths inside the block of ``e0`` that only use larger edge ids.
    """
    dec = decomposition or blocks(g)
    for b in dec.nontrivial_blocks:
        adj = {}
        for e in sorted(b.edges):
            u, v = g.ends(e)
            if u == v:
                yield PathElement(CIRCLE, (e,))
                continue
            adj.setdefault(u, []).append((e, v))
            adj.setdefault(v, []).append((e, u))
        for e0 in sorted(b.edges):
            s, t = g.ends(e0)
            if s == t:
                continue
            yield from _paths_back(adj, e0, s, t)


def _paths_back(adj, e0, s, t):
    seq = [e0]
    on_path = {s, t}
    stack = [(t, iter(adj[t]))]
    while stack:
        v, it = stack[-1]
        for e, w in it:
            if e <= e0:
                continue
            if w == s:
                yield PathElement(CIRCLE, tuple(seq) + (e,))
                continue
            if w in on_path:
                continue
            seq.append(e)
            on_path.add(w)
            stack.append((w, iter(adj[w])))
            break
        else:
            stack.pop()
            if len(seq) > 1:
                seq.pop()
                on_path.discard(v)


def enumerate_circles(g: Graph, cap: int) -> list:
    """All circles of ``g`` ordered by their sorted edge-id tuples."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    found = []
    for c in iter_circles(g):
        found.append(c)
        if len(found) > cap:
            raise CircleCapExceeded(cap)
    found.sort(key=lambda c: sorted(c.edge_seq))
    return found


@dataclass(frozen=True)
class SuppressionResult:
    reduced: SignedGraph
    edge_expansion: Mapping[int, tuple]
    vertex_map: Mapping[int, int]


def suppress_divalent(s: SignedGraph) -> SuppressionResult:
    """Suppress divalent vertices until only loop-supporting ones remain.

    Vertices are suppressed highest index first, so a circle component keeps
    its lowest-index vertex.  Each new edge gets the next unused id and the
    sign product of the edges it replaces; ``edge_expansion`` lists those
    original edges in walking order from the new edge's first endpoint.
    """
    g = s.graph
    live = {e: [u, v, (e,)] for e, u, v in g.edges}
    incid = {v: set(es) for v, es in enumerate(g.incidence)}
    next_id = max(live, default=-1) + 1
    removed = set()

    def has_loop(v):
        return any(live[e][0] == live[e][1] for e in incid[v])

    candidates = [v for v in range(g.n_vertices) if g.degrees[v] == 2]
    while candidates:
        v = candidates.pop()
        if has_loop(v):
            continue
        e1, e2 = sorted(incid[v])
        a, b = _oriented(live.pop(e1), end=v), _oriented(live.pop(e2), start=v)
        new = [a[0], b[1], a[2] + b[2]]
        live[next_id] = new
        for x, e in ((a[0], e1), (b[1], e2)):
            incid[x].discard(e)
            incid[x].add(next_id)
        del incid[v]
        removed.add(v)
        next_id += 1

    survivors = [v for v in range(g.n_vertices) if v not in removed]
    vmap = {v: i for i, v in enumerate(survivors)}
    edges, sign, expansion = [], {}, {}
    for e, (u, v, exp) in live.items():
        edges.append((e, vmap[u], vmap[v]))
        sign[e] = prod(s.sign[x] for x in exp)
        expansion[e] = exp
    reduced = SignedGraph(Graph(len(survivors), edges), sign)
    return SuppressionResult(reduced, dict(sorted(expansion.items())), vmap)


def _oriented(rec, start=None, end=None):
    u, v, exp = rec
    if (start is not None and u != start) or (end is not None and v != end):
        return [v, u, exp[::-1]]
    return [u, v, exp]
