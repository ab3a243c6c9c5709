"""Construction A: negate a vertex-disjoint family of admissible paths and circles."""

from __future__ import annotations

import random
from collections import Counter

from ..core import CIRCLE, CLOSED, OPEN, Graph, PathElement, SignedGraph, path_vertices
from ..exceptions import InvalidPath, InvalidPlan, UnknownEdge
from ..structure import blocks, megablocks
from .plans import PlanA, Violation


class _Structure:
    """Block data of a base graph, computed once per validation."""

    def __init__(self, g: Graph):
        self.g = g
        self.dec = blocks(g)
        self.block_of = self.dec.block_of_edge()
        self.bridges = frozenset(e for b in self.dec.blocks if b.is_isthmus for e in b.edges)
        self.megas = set(megablocks(g, self.dec))

    def block_degree(self, block_index, v):
        count = 0
        for e in self.dec.blocks[block_index].edges:
            a, b = self.g.ends(e)
            count += (a == v) + (b == v)
        return count


def _clause_i(st, el, verts):
    g = st.g
    if el.kind == CIRCLE:
        return "a circle is not a path"
    ids = {st.block_of[e] for e in el.edge_seq}
    if len(ids) != 1:
        return "edges lie in different blocks"
    (bi,) = ids
    if not st.dec.blocks[bi].nontrivial:
        return "block is trivial"
    for v in verts[1:-1]:
        if st.block_degree(bi, v) != 2:
            return f"internal vertex {v} is not divalent in its block"
    for v in verts:
        if g.degrees[v] > 3:
            return f"vertex {v} has degree {g.degrees[v]} > 3"
    for t in (verts[0], verts[-1]):
        if g.degrees[t] != 2:
            return f"terminus {t} has degree {g.degrees[t]} != 2"
    return None


def _clause_ii(st, el, verts):
    g = st.g
    if el.kind != OPEN:
        return "not an open path"
    for e in el.edge_seq:
        if e not in st.bridges:
            return f"edge {e} is not an isthmus"
    for v in verts:
        if g.degrees[v] > 3:
            return f"vertex {v} has degree {g.degrees[v]} > 3"
    for t in (verts[0], verts[-1]):
        if g.degrees[t] > 2:
            return f"terminus {t} has degree {g.degrees[t]} > 2"
    return None


def _clause_iii(st, el, verts):
    g = st.g
    if el.kind != CIRCLE:
        return "not a circle"
    if el.edge_set not in st.megas:
        return "circle is not a whole megablock"
    for v in verts:
        if g.degrees[v] > 3:
            return f"vertex {v} has degree {g.degrees[v]} > 3"
    return None


def admissible(st, el, verts):
    """None if ``el`` satisfies clause (i), (ii) or (iii); else the reasons."""
    reasons = []
    for name, clause in (("i", _clause_i), ("ii", _clause_ii), ("iii", _clause_iii)):
        why = clause(st, el, verts)
        if why is None:
            return None
        reasons.append(f"({name}) {why}")
    return "; ".join(reasons)


def validate_plan_a(p: PlanA) -> list:
    st = _Structure(p.base)
    found = []
    owner = {}
    for i, el in enumerate(p.elements):
        try:
            verts = path_vertices(p.base, el)
        except (InvalidPath, UnknownEdge) as err:
            found.append(Violation("A", f"not a path or circle: {err}", element=i))
            continue
        why = admissible(st, el, verts)
        if why is not None:
            found.append(Violation("A", why, element=i))
        for v in set(verts):
            if v in owner:
                found.append(Violation("disjoint", f"shares a vertex with element {owner[v]}", element=i, vertex=v))
            else:
                owner[v] = i
    return found


def apply_plan_a(p: PlanA) -> SignedGraph:
    violations = validate_plan_a(p)
    if violations:
        raise InvalidPlan(violations)
    negative = {e for el in p.elements for e in el.edge_seq}
    return SignedGraph(p.base, {e: -1 if e in negative else 1 for e in p.base.edge_ids})


def candidate_elements(g: Graph) -> list:
    """Every path or circle that Construction A accepts on its own."""
    st = _Structure(g)
    deg = g.degrees
    found = {}

    def offer(el):
        el = el.canonical()
        try:
            verts = path_vertices(g, el)
        except InvalidPath:
            return
        if admissible(st, el, verts) is None:
            found[(el.kind, el.edge_seq, el.termini)] = el

    for mega in st.megas:
        if any(deg[x] > 3 for e in mega for x in g.ends(e)):
            continue
        seq = _circle_order(g, mega)
        if seq is not None:
            offer(PathElement(CIRCLE, seq))

    adj = {}
    for e, u, v in g.edges:
        adj.setdefault(u, []).append((e, v))
        if u != v:
            adj.setdefault(v, []).append((e, u))
    for a in range(g.n_vertices):
        if deg[a] > 2:
            continue
        # Depth-first over vertices of degree <= 3, staying in one edge class.
        stack = [(a, (), (a,), None)]
        while stack:
            v, seq, visited, cls = stack.pop()
            for e, w in adj.get(v, ()):
                if e in seq or deg[w] > 3:
                    continue
                ecls = "isthmus" if e in st.bridges else st.block_of[e]
                if cls is not None and ecls != cls:
                    continue
                nseq = seq + (e,)
                if w == a:
                    offer(PathElement(CLOSED, nseq, (a, a)))
                    continue
                if w in visited:
                    continue
                offer(PathElement(OPEN, nseq, (a, w)))
                stack.append((w, nseq, visited + (w,), ecls))
    return sorted(found.values(), key=lambda el: (el.kind, el.edge_seq, el.termini))


def _circle_order(g, edge_set):
    """Edge sequence around ``edge_set`` if it forms a single circle."""
    count = Counter()
    for e in edge_set:
        a, b = g.ends(e)
        count[a] += 1
        count[b] += 1
    if any(c != 2 for c in count.values()):
        return None
    edges = sorted(edge_set)
    seq = [edges[0]]
    start, cur = g.ends(edges[0])
    remaining = set(edges[1:])
    while remaining:
        nxt = next((e for e in sorted(remaining) if cur in g.ends(e)), None)
        if nxt is None:
            return None
        remaining.discard(nxt)
        seq.append(nxt)
        cur = g.other_end(nxt, cur)
    return tuple(seq) if cur == start else None


def sample_plan_a(g: Graph, seed: int, keep_prob: float = 0.5) -> PlanA:
    """Random valid plan: shuffle all admissible elements, greedily keep
    vertex-disjoint ones, each with probability ``keep_prob``."""
    rng = random.Random(seed)
    cands = candidate_elements(g)
    rng.shuffle(cands)
    used = set()
    chosen = []
    for el in cands:
        if rng.random() >= keep_prob:
            continue
        verts = set(path_vertices(g, el))
        if verts & used:
            continue
        used |= verts
        chosen.append(el)
    return PlanA(g, tuple(chosen))
