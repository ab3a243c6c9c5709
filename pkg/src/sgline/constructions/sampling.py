"""Seeded samplers for Construction B, C and D plans.

Every sampler is deterministic in its seed and only returns plans that pass
their validator; internal failures are retried with the same generator.
"""

from __future__ import annotations

import random

from ..core import CIRCLE, CLOSED, OPEN, Graph, PathElement, SignedGraph, path_vertices
from ..exceptions import InvalidCut, InvalidPath, RetryBudgetExhausted
from ..generators import NEGATIVE_PROBS, random_sparse_graph
from ..structure import blocks, suppress_divalent
from .construction_b import (
    _Base,
    derive_block_signs,
    end_requirements,
    feasible,
    random_sign_sequence,
    step3_problems,
    validate_plan_b,
)
from .plans import PlanB, PlanC, PlanD, plan_c_from_b

MAX_RETRIES = 50
MAX_LENGTH = 8


class _Retry(Exception):
    pass


def _subcubic_graph(rng, max_vertices, extra_edges):
    """Random tree of maximum degree 3, a few extra edges between vertices of
    spare degree, and the odd loop on a leaf."""
    n = rng.randint(1, max_vertices)
    deg = [0] * n
    pairs = []
    for v in range(1, n):
        open_ = [u for u in range(v) if deg[u] < 3]
        u = rng.choice(open_)
        pairs.append((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(rng.randint(0, extra_edges)):
        spare = [v for v in range(n) if deg[v] < 3]
        if len(spare) < 2:
            break
        u, v = rng.sample(spare, 2)
        pairs.append((u, v))
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        if deg[v] <= 1 and rng.random() < 0.15:
            pairs.append((v, v))
            deg[v] += 2
    return Graph(n, [(e, u, v) for e, (u, v) in enumerate(pairs)])


def random_base_graph(rng: random.Random, max_vertices=10, extra_edges=4) -> Graph:
    """Random loop-allowed multigraph with every suppressible vertex suppressed,
    renumbered to edge ids 0..m-1."""
    style = rng.random()
    if style < 0.6:
        g = _subcubic_graph(rng, max_vertices, extra_edges)
    elif style < 0.85:
        g = random_sparse_graph(rng, max_vertices, extra_edges)
    else:
        g = random_sparse_graph(rng, max_vertices, extra_edges + 2)
    plain = SignedGraph(g, {e: 1 for e in g.edge_ids})
    red = suppress_divalent(plain).reduced.graph
    return Graph(red.n_vertices, [(i, u, v) for i, (_, u, v) in enumerate(red.edges)])


def _singletons(g: Graph, f_prime):
    out = []
    for e in sorted(f_prime):
        u, v = g.ends(e)
        if u != v:
            out.append(PathElement(OPEN, (e,), (u, v)))
        elif g.degrees[u] == 2:
            out.append(PathElement(CIRCLE, (e,)))
        else:
            out.append(PathElement(CLOSED, (e,), (u, u)))
    return out


def _acceptable(base, el):
    try:
        verts = path_vertices(base.g, el)
    except InvalidPath:
        return False
    return not step3_problems(base, el, verts)


def _join(a: PathElement, b: PathElement, t: int):
    if a.termini[1] == t:
        seq1, start = a.edge_seq, a.termini[0]
    else:
        seq1, start = a.edge_seq[::-1], a.termini[1]
    if b.termini[0] == t:
        seq2, end = b.edge_seq, b.termini[1]
    else:
        seq2, end = b.edge_seq[::-1], b.termini[0]
    kind = CLOSED if start == end else OPEN
    return PathElement(kind, seq1 + seq2, (start, end))


def _possible_merges(base, elements):
    out = []
    for i, el in enumerate(elements):
        if el.kind == CLOSED:
            cand = PathElement(CIRCLE, el.edge_seq)
            if _acceptable(base, cand):
                out.append(((i,), cand))
        elif el.kind == OPEN:
            for j in range(i + 1, len(elements)):
                other = elements[j]
                if other.kind != OPEN:
                    continue
                for t in set(el.termini) & set(other.termini):
                    cand = _join(el, other, t)
                    if _acceptable(base, cand):
                        out.append(((i, j), cand))
    return out


def random_partition(rng: random.Random, base: _Base, f_prime, stop_prob=0.1) -> list:
    """Start from one element per edge and apply random admissible merges,
    stopping after each merge with probability ``stop_prob``."""
    elements = _singletons(base.g, f_prime)
    while True:
        merges = _possible_merges(base, elements)
        if not merges or rng.random() < stop_prob:
            return elements
        idx, cand = rng.choice(merges)
        elements = [el for k, el in enumerate(elements) if k not in idx] + [cand]


def _subdivisions(rng, base, sigma, f_prime, elements):
    g = base.g
    reqs = {}
    for el in elements:
        reqs.update(end_requirements(g, el, path_vertices(g, el)))
    lengths, seqs = {}, {}
    for e in g.edge_ids:
        n = rng.choice((1, 1, 2, 3, 4))
        if e in f_prime:
            first, last = reqs[e]
            target = sigma[e] if sigma is not None else None
            while not feasible(n, first, last, target) and n < MAX_LENGTH:
                n += 1
            seqs[e] = random_sign_sequence(rng, n, first, last, target)
            if seqs[e] is None:
                raise _Retry
        else:
            seqs[e] = (1,) * n
        lengths[e] = n
    return lengths, seqs


def _grow(rng, base_signed: SignedGraph, extra_prob=0.4):
    """F', D', lengths and sign sequences over an already-signed base."""
    g = base_signed.graph
    base = _Base(g)
    f_prime = set(base_signed.negative_edges)
    f_prime |= {e for e in g.edge_ids if rng.random() < extra_prob}
    elements = random_partition(rng, base, f_prime)
    lengths, seqs = _subdivisions(rng, base, base_signed.sign, f_prime, elements)
    return frozenset(f_prime), tuple(elements), lengths, seqs


def sample_plan_b(seed: int, max_vertices=10, extra_edges=4) -> PlanB:
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        g = random_base_graph(rng, max_vertices, extra_edges)
        p = rng.choice(NEGATIVE_PROBS)
        signed = SignedGraph(g, {e: -1 if rng.random() < p else 1 for e in g.edge_ids})
        try:
            plan = PlanB(signed, *_grow(rng, signed))
        except _Retry:
            continue
        if not validate_plan_b(plan):
            return plan
    raise RetryBudgetExhausted(f"no valid Construction B plan for seed {seed}")


def sample_plan_c(seed: int, max_vertices=10, extra_edges=4) -> PlanC:
    return plan_c_from_b(sample_plan_b(seed, max_vertices, extra_edges))


def _random_block_signing(rng, g: Graph):
    dec = blocks(g)
    signing = {}
    for i, b in enumerate(dec.nontrivial_blocks):
        if len(b.vertices) < 2 or rng.random() < 0.5:
            continue
        verts = sorted(b.vertices)
        x = frozenset(rng.sample(verts, rng.randint(1, len(verts) - 1)))
        signing[i] = x
    isthmus_signs = {
        e: -1 for blk in dec.blocks if blk.is_isthmus for e in blk.edges if rng.random() < 0.2
    }
    return signing, isthmus_signs


def sample_plan_d(seed: int, max_vertices=7, extra_edges=3) -> PlanD:
    """Bases are kept a little smaller than for Construction B so that the
    line graph of every simple output stays within reach of the circle oracle."""
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        g = random_base_graph(rng, max_vertices, extra_edges)
        signing, isthmus_signs = _random_block_signing(rng, g)
        skeleton = PlanD(g, block_signing=signing, isthmus_signs=isthmus_signs)
        try:
            signed = derive_block_signs(skeleton)
        except InvalidCut:
            continue
        try:
            f_prime, elements, lengths, seqs = _grow(rng, signed)
        except _Retry:
            continue
        plan = PlanD(g, f_prime, elements, lengths, seqs, signing, isthmus_signs)
        if not validate_plan_b(PlanB(signed, f_prime, elements, lengths, seqs)):
            return plan
    raise RetryBudgetExhausted(f"no valid Construction D plan for seed {seed}")
