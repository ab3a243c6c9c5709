"""Building line-consistent graphs from plans, and saving the plans."""
from itertools import combinations

from sgline import CIRCLE, OPEN, Graph, PathElement, SignedGraph, is_line_consistent, property3_local
from sgline.constructions import (
    PlanA,
    PlanB,
    PlanD,
    apply_plan_a,
    apply_plan_b,
    apply_plan_d,
    sample_plan_b,
    serialize_plan,
    validate_plan_a,
)

# %% Plan A: mark paths in an unsigned graph negative.
c4 = Graph(4, [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 0)])
plan = PlanA(c4, (PathElement(OPEN, (0, 1), (0, 2)),))
print("plan A problems:", validate_plan_a(plan))
print("plan A output signs:", apply_plan_a(plan).sign)

# A single edge of K4 is rejected: both endpoints would see one negative edge.
k4 = Graph(4, [(e, u, v) for e, (u, v) in enumerate(combinations(range(4), 2))])
for v in validate_plan_a(PlanA(k4, (PathElement(OPEN, (0,), (0, 1)),))):
    print("  rejected:", v)

# %% Plan B: subdivide a positive loop into a signed square.
loop = SignedGraph.from_edges(1, [(0, 0, 1)])
b = PlanB(loop, frozenset({0}), (PathElement(CIRCLE, (0,)),), {0: 4}, {0: (-1, -1, 1, 1)})
s = apply_plan_b(b)
print("\nplan B output has", s.n_vertices, "vertices; local property:", property3_local(s).ok)

# %% Random plans are reproducible from a seed and serialise to plain text.
p = sample_plan_b(3)
print("\nsampled plan B, seed 3:")
print(serialize_plan(p), end="")

# %% Plan D: sign each block by a cut, then subdivide.  The cut around vertex 0
# makes edges 0, 1, 2 negative; each is replaced by a +-+ path.
cut_edges = (0, 1, 2)
d = apply_plan_d(PlanD(
    k4,
    frozenset(cut_edges),
    tuple(PathElement(OPEN, (e,), k4.endpoints[e]) for e in cut_edges),
    {e: 3 for e in cut_edges},
    {e: (1, -1, 1) for e in cut_edges},
    block_signing={0: frozenset({0})},
))
rep = is_line_consistent(d)
print("\nplan D: balanced", rep.balanced, "line-consistent", rep.line_consistent)
