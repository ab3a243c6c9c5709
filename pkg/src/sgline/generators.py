"""Seeded random graphs for tests, samplers and the equivalence suites."""

from __future__ import annotations

import random
from itertools import combinations

from .core import Graph, SignedGraph

NEGATIVE_PROBS = (0.1, 0.3, 0.5)


def random_simple_graph(rng: random.Random, max_vertices=8, max_edges=14) -> Graph:
    """``n`` uniform in 1..max_vertices, then a uniform edge set of uniform size."""
    n = rng.randint(1, max_vertices)
    pairs = list(combinations(range(n), 2))
    m = rng.randint(0, min(max_edges, len(pairs)))
    chosen = rng.sample(pairs, m)
    return Graph(n, [(e, u, v) for e, (u, v) in enumerate(chosen)])


def random_multigraph(rng: random.Random, max_vertices=8, max_edges=12, loop_prob=0.15) -> Graph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    edges = []
    for e in range(m):
        if rng.random() < loop_prob:
            u = v = rng.randrange(n)
        else:
            u, v = rng.randrange(n), rng.randrange(n)
        edges.append((e, u, v))
    return Graph(n, edges)


def random_sparse_graph(rng: random.Random, max_vertices=10, extra_edges=3, multigraph=True) -> Graph:
    """Random forest plus a few extra edges; most degrees stay at 3 or below."""
    n = rng.randint(1, max_vertices)
    pairs = []
    for v in range(1, n):
        if rng.random() < 0.85:
            pairs.append((rng.randrange(v), v))
    for _ in range(rng.randint(0, extra_edges)):
        u, v = rng.randrange(n), rng.randrange(n)
        if not multigraph and (u == v or (min(u, v), max(u, v)) in pairs):
            continue
        pairs.append((min(u, v), max(u, v)))
    return Graph(n, [(e, u, v) for e, (u, v) in enumerate(pairs)])


def random_two_connected_graph(rng: random.Random, max_vertices=8) -> Graph:
    """Simple 2-connected graph grown from a circle by adding random ears."""
    n_target = rng.randint(3, max_vertices)
    k = rng.randint(3, n_target)
    pairs = {(i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)}
    n = k
    for _ in range(rng.randint(0, 6)):
        a, b = rng.sample(range(n), 2)
        inner = rng.randint(0, n_target - n)
        if inner == 0:
            key = (min(a, b), max(a, b))
            if key in pairs:
                continue
            pairs.add(key)
            continue
        chain = [a] + list(range(n, n + inner)) + [b]
        n += inner
        for x, y in zip(chain, chain[1:]):
            pairs.add((min(x, y), max(x, y)))
    return Graph(n, [(e, u, v) for e, (u, v) in enumerate(sorted(pairs))])


def random_signing(rng: random.Random, g: Graph, p_negative: float) -> SignedGraph:
    return SignedGraph(g, {e: -1 if rng.random() < p_negative else 1 for e in g.edge_ids})


def random_cut_signing(rng: random.Random, g: Graph) -> SignedGraph:
    """A balanced signing: the cut of a random vertex set is negative."""
    x = {v for v in range(g.n_vertices) if rng.random() < 0.5}
    return SignedGraph(g, {e: -1 if (u in x) != (v in x) else 1 for e, u, v in g.edges})
