"""Constructions B, C and D: subdivide a base graph and sign the subdivisions.

Subdivision numbering is canonical: base vertices keep their indices, new
vertices are appended along each subdivided edge in ascending base edge id,
and the edges of the result are numbered 0, 1, ... in that same order.
"""

from __future__ import annotations

from math import prod
from typing import Optional

from ..core import CIRCLE, Graph, PathElement, SignedGraph, path_vertices
from ..exceptions import InvalidCut, InvalidPath, InvalidPlan, UnknownEdge
from ..structure import blocks
from .plans import PlanB, PlanC, PlanD, Violation


class _Base:
    def __init__(self, g: Graph):
        self.g = g
        self.dec = blocks(g)
        self.block_of = self.dec.block_of_edge()
        self.bridges = frozenset(e for b in self.dec.blocks if b.is_isthmus for e in b.edges)

    def has_loop(self, v):
        return any(self.g.is_loop(e) for e in self.g.incidence[v])


def internal_vertices(p: PathElement, verts) -> list:
    return verts[:-1] if p.kind == CIRCLE else verts[1:-1]


def step3_problems(base: _Base, el: PathElement, verts) -> list:
    """Messages for each of Step 3 (a)-(d) that ``el`` fails."""
    g = base.g
    deg = g.degrees
    out = []
    for v in internal_vertices(el, verts):
        if deg[v] > 3:
            out.append(("3a", v, f"internal vertex {v} has degree {deg[v]} > 3"))
        elif deg[v] == 3:
            third = [e for e in g.incidence[v] if e not in el.edge_set]
            if len(third) != 1 or third[0] not in base.bridges:
                out.append(("3b", v, f"third edge at trivalent internal vertex {v} is not an isthmus"))
    cls = {base.block_of[e] for e in el.edge_seq}
    in_one_block = len(cls) == 1 and base.dec.blocks[next(iter(cls))].nontrivial
    all_isthmi = all(e in base.bridges for e in el.edge_seq)
    if el.kind == "open":
        if not (in_one_block or all_isthmi):
            out.append(("3c", None, "open path neither inside one nontrivial block nor all isthmi"))
    elif not in_one_block:
        out.append(("3c", None, f"{el.kind} path not inside one nontrivial block"))
    for t in set(el.termini):
        if deg[t] == 2:
            out.append(("3d", t, f"terminus {t} is divalent"))
    return out


def end_requirements(g: Graph, el: PathElement, verts) -> dict:
    """Required sign (or None) of the first and last subdivision edge of each
    base edge of ``el``, in the base edge's stored orientation.

    Terminal edges at a terminus of degree != 1 must be positive; edges at a
    trivalent internal vertex must be negative.
    """
    deg = g.degrees
    k = len(el.edge_seq)
    reqs = {}
    for j, f in enumerate(el.edge_seq):
        x, y = verts[j], verts[j + 1]
        at_x = at_y = None
        if j == 0 and el.kind != CIRCLE:
            at_x = 1 if deg[x] != 1 else None
        elif deg[x] == 3:
            at_x = -1
        if j == k - 1 and el.kind != CIRCLE:
            at_y = 1 if deg[y] != 1 else None
        elif deg[y] == 3:
            at_y = -1
        if g.ends(f)[0] == x:
            reqs[f] = (at_x, at_y)
        else:
            reqs[f] = (at_y, at_x)
    return reqs


def feasible(length: int, first: Optional[int], last: Optional[int], target: Optional[int]) -> bool:
    """Is there a sign sequence of ``length`` with the given end signs, product
    ``target`` (if given), and at least one negative sign?"""
    if length < 1:
        return False
    fixed = {}
    for pos, req in ((0, first), (length - 1, last)):
        if req is None:
            continue
        if fixed.get(pos, req) != req:
            return False
        fixed[pos] = req
    free = length - len(fixed)
    has_neg = any(x < 0 for x in fixed.values())
    if target is None:
        return has_neg or free >= 1
    if free == 0:
        return has_neg and prod(fixed.values()) == target
    if has_neg or target * prod(fixed.values()) < 0:
        return True
    return free >= 2


def random_sign_sequence(rng, length, first, last, target):
    """A random sequence meeting ``feasible``'s conditions, or None."""
    if not feasible(length, first, last, target):
        return None
    fixed = {}
    if first is not None:
        fixed[0] = first
    if last is not None:
        fixed[length - 1] = last
    seq = [fixed[i] if i in fixed else rng.choice((1, -1)) for i in range(length)]
    free = [i for i in range(length) if i not in fixed]
    if target is not None and prod(seq) != target:
        i = rng.choice(free)
        seq[i] = -seq[i]
    if all(x > 0 for x in seq):
        for i in rng.sample(free, 1 if target is None else 2):
            seq[i] = -1
    return tuple(seq)


def _validate(g: Graph, sigma, f_prime, d_prime, lengths, sign_seqs, containment=True) -> list:
    base = _Base(g)
    found = []
    deg = g.degrees
    ids = set(g.edge_ids)

    for v in range(g.n_vertices):
        if deg[v] == 2 and not base.has_loop(v):
            found.append(Violation("base", "divalent vertex that supports no loop", vertex=v))

    for e in sorted(f_prime - ids):
        found.append(Violation("2", "F' names an unknown edge", edge=e))
    if containment and sigma is not None:
        for e in g.edge_ids:
            if sigma[e] < 0 and e not in f_prime:
                found.append(Violation("2", "negative edge missing from F'", edge=e))

    cover = {}
    walks = []
    for i, el in enumerate(d_prime):
        try:
            verts = path_vertices(g, el)
        except (InvalidPath, UnknownEdge) as err:
            found.append(Violation("3", f"not a path or circle: {err}", element=i))
            walks.append(None)
            continue
        walks.append(verts)
        for e in el.edge_seq:
            if e in cover:
                found.append(Violation("3", f"edge also used by element {cover[e]}", element=i, edge=e))
            cover.setdefault(e, i)
            if e not in f_prime:
                found.append(Violation("3", "edge not in F'", element=i, edge=e))
        for step, v, msg in step3_problems(base, el, verts):
            found.append(Violation(step, msg, element=i, vertex=v))
    for e in sorted(f_prime & ids):
        if e not in cover:
            found.append(Violation("3", "edge of F' not covered by D'", edge=e))

    for e in sorted(set(lengths) - ids):
        found.append(Violation("4", "subdivision given for an unknown edge", edge=e))
    for e in g.edge_ids:
        n, seq = lengths.get(e, 0), sign_seqs.get(e, ())
        if n < 1:
            found.append(Violation("4", f"subdivision length {n} < 1", edge=e))
        elif len(seq) != n:
            found.append(Violation("4", f"{len(seq)} signs for length {n}", edge=e))
        elif e not in f_prime and any(x < 0 for x in seq):
            found.append(Violation("5", "edge outside F' is not all positive", edge=e))

    for i, (el, verts) in enumerate(zip(d_prime, walks)):
        if verts is None:
            continue
        for f, (first, last) in end_requirements(g, el, verts).items():
            n, seq = lengths.get(f, 0), sign_seqs.get(f, ())
            if n < 1 or len(seq) != n:
                continue
            target = sigma[f] if sigma is not None else None
            before = len(found)
            if target is not None and prod(seq) != target:
                found.append(Violation("6a", "sign product differs from the base sign", element=i, edge=f))
            if all(x > 0 for x in seq):
                found.append(Violation("6b", "subdivision path is all positive", element=i, edge=f))
            for req, pos in ((first, 0), (last, n - 1)):
                if req == 1 and seq[pos] < 0:
                    found.append(Violation("6c", "terminal edge at a non-univalent terminus is negative", element=i, edge=f))
                elif req == -1 and seq[pos] > 0:
                    found.append(Violation("6d", "edge at a trivalent internal vertex is positive", element=i, edge=f))
            if len(found) > before and not feasible(n, first, last, target):
                found.append(
                    Violation("SignInfeasible", f"no signing of length {n} meets Step 6", element=i, edge=f)
                )
    return found


def validate_plan_b(p: PlanB) -> list:
    return _validate(p.base, p.base_signed.sign, p.f_prime, p.d_prime, p.lengths, p.sign_seqs)


def validate_plan_c(p: PlanC) -> list:
    return _validate(p.base, None, p.f_prime, p.d_prime, p.lengths, p.sign_seqs, containment=False)


def subdivide(g: Graph, lengths, sign_seqs) -> SignedGraph:
    """Replace every base edge by a path of its length, carrying its signs."""
    edges = []
    sign = {}
    next_v = g.n_vertices
    for e, u, v in g.edges:
        n = lengths[e]
        chain = [u] + list(range(next_v, next_v + n - 1)) + [v]
        next_v += n - 1
        for k in range(n):
            eid = len(edges)
            edges.append((eid, chain[k], chain[k + 1]))
            sign[eid] = sign_seqs[e][k]
    return SignedGraph(Graph(next_v, edges), sign)


def apply_plan_b(p: PlanB) -> SignedGraph:
    violations = validate_plan_b(p)
    if violations:
        raise InvalidPlan(violations)
    return subdivide(p.base, p.lengths, p.sign_seqs)


def apply_plan_c(p: PlanC):
    """Returns the constructed graph and the base signs read back from it."""
    violations = validate_plan_c(p)
    if violations:
        raise InvalidPlan(violations)
    s = subdivide(p.base, p.lengths, p.sign_seqs)
    derived = SignedGraph(p.base, {e: prod(p.sign_seqs[e]) for e in p.base.edge_ids})
    return s, derived


def derive_block_signs(p: PlanD) -> SignedGraph:
    """Base signs for Construction D: each signed nontrivial block gets its cut
    negative, isthmi default to positive."""
    g = p.base
    dec = blocks(g)
    nontrivial = dec.nontrivial_blocks
    sign = {e: 1 for e in g.edge_ids}
    bad = []
    for i, x in p.block_signing.items():
        if not 0 <= i < len(nontrivial):
            bad.append(Violation("D", f"no nontrivial block {i}"))
            continue
        b = nontrivial[i]
        if not x <= b.vertices:
            bad.append(Violation("D", f"cut set of block {i} leaves the block"))
            continue
        cut = [e for e in b.edges if (g.ends(e)[0] in x) != (g.ends(e)[1] in x)]
        if not cut:
            bad.append(Violation("D", f"vertex set for block {i} defines no cut"))
            continue
        for e in cut:
            sign[e] = -1
    bridges = {e for b in dec.blocks if b.is_isthmus for e in b.edges}
    for e, s in p.isthmus_signs.items():
        if e not in bridges:
            bad.append(Violation("D", "sign override for an edge that is not an isthmus", edge=e))
        else:
            sign[e] = s
    if bad:
        raise InvalidCut(bad)
    return SignedGraph(g, sign)


def plan_b_from_d(p: PlanD) -> PlanB:
    return PlanB(derive_block_signs(p), p.f_prime, p.d_prime, p.lengths, p.sign_seqs)


def apply_plan_d(p: PlanD) -> SignedGraph:
    return apply_plan_b(plan_b_from_d(p))
