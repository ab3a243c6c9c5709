"""Recover the unique Construction B plan behind a signed graph.

The base is the graph with all possible divalent vertices suppressed.  Its
edges are renumbered by the smallest original edge they replace and oriented
so the replaced edges run in increasing id order; for graphs produced by
``apply_plan_b`` from a canonically numbered plan this reproduces the plan
exactly.
"""

from __future__ import annotations

from math import prod

from .constructions.construction_b import apply_plan_b
from .constructions.plans import PlanB
from .core import CIRCLE, CLOSED, OPEN, Graph, PathElement, SignedGraph
from .exceptions import PropertyViolated
from .properties import property3_local
from .structure import suppress_divalent


def _recover(s: SignedGraph):
    check = property3_local(s)
    if not check.ok:
        raise PropertyViolated(check.violations)
    sup = suppress_divalent(s)
    red = sup.reduced.graph
    to_orig = {i: v for v, i in sup.vertex_map.items()}

    segments = []  # (u, v, expansion) in base vertices, canonical orientation
    for r, u, v in red.edges:
        exp = sup.edge_expansion[r]
        if len(exp) > 1 and exp[0] > exp[-1]:
            u, v, exp = v, u, exp[::-1]
        segments.append((u, v, exp))
    segments.sort(key=lambda seg: min(seg[2]))

    n_base = red.n_vertices
    base_edges = [(i, u, v) for i, (u, v, _) in enumerate(segments)]
    seqs = {i: tuple(s.sign[x] for x in exp) for i, (_, _, exp) in enumerate(segments)}
    base_graph = Graph(n_base, base_edges)
    base_signed = SignedGraph(base_graph, {i: prod(q) for i, q in seqs.items()})
    f_prime = frozenset(i for i, q in seqs.items() if any(x < 0 for x in q))

    # Segment ends at base vertices: (segment, 0 for start / 1 for end).
    ends_at = {}
    for i in sorted(f_prime):
        u, v, exp = segments[i]
        ends_at.setdefault(u, []).append((i, 0, exp[0]))
        ends_at.setdefault(v, []).append((i, 1, exp[-1]))
    partner = {}
    for x, ends in ends_at.items():
        if base_graph.degrees[x] == 2:
            joinable = ends
        else:
            joinable = [t for t in ends if s.sign[t[2]] < 0]
        if len(joinable) == 2:
            a, b = (t[:2] for t in joinable)
            partner[a] = b
            partner[b] = a

    elements = []
    done = set()

    def walk(i, k):
        """Follow the chain leaving segment ``i`` through end ``1 - k``."""
        seq = []
        while True:
            seq.append(i)
            done.add(i)
            out = (i, 1 - k)
            nxt = partner.get(out)
            if nxt is None or nxt[0] in done:
                return seq, out, nxt
            i, k = nxt

    for i in sorted(f_prime):
        if i in done:
            continue
        # Back up to a free end if the chain has one.
        start = (i, 0)
        seen = {start}
        while start in partner:
            j, k = partner[start]
            start = (j, 1 - k)
            if start in seen:
                break
            seen.add(start)
        chain_is_cycle = start in partner
        seq, last_end, _ = walk(*start)
        if chain_is_cycle:
            elements.append(PathElement(CIRCLE, seq))
            continue
        t0 = _end_vertex(segments, start)
        t1 = _end_vertex(segments, last_end)
        kind = CLOSED if t0 == t1 else OPEN
        elements.append(PathElement(kind, seq, (t0, t1)))

    lengths = {i: len(exp) for i, (_, _, exp) in enumerate(segments)}
    plan = PlanB(base_signed, f_prime, tuple(elements), lengths, seqs)

    edge_map, vertex_map = {}, {to_orig[x]: x for x in range(n_base)}
    next_v = n_base
    for u, v, exp in segments:
        cur = to_orig[u]
        for x in exp[:-1]:
            cur = s.graph.other_end(x, cur)
            vertex_map[cur] = next_v
            next_v += 1
        for x in exp:
            edge_map[x] = len(edge_map)
    return plan, edge_map, vertex_map


def _end_vertex(segments, end):
    i, k = end
    u, v, _ = segments[i]
    return v if k == 1 else u


def recover_plan(s: SignedGraph) -> PlanB:
    """The Construction B plan that builds ``s`` (up to canonical numbering)."""
    return _recover(s)[0]


def round_trip_check(s: SignedGraph) -> bool:
    """Rebuild ``s`` from its recovered plan and compare edge by edge through
    the numbering the recovery assigns."""
    plan, edge_map, vertex_map = _recover(s)
    rebuilt = apply_plan_b(plan)
    if len(edge_map) != rebuilt.graph.n_edges or sorted(vertex_map.values()) != list(range(rebuilt.n_vertices)):
        return False
    if len(vertex_map) != s.n_vertices:
        return False
    for e, u, v in s.edges:
        a, b = rebuilt.graph.ends(edge_map[e])
        if sorted((a, b)) != sorted((vertex_map[u], vertex_map[v])):
            return False
        if rebuilt.sign[edge_map[e]] != s.sign[e]:
            return False
    return True
