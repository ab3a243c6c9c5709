"""Two independent balance tests and the certificates they return."""
from sgline import SignedGraph, is_balanced, is_balanced_cut, is_balanced_switching

triangle = SignedGraph.from_edges(3, [(0, 1, -1), (1, 2, 1), (2, 0, 1)])
hexagon = SignedGraph.from_edges(6, [(i, (i + 1) % 6, -1 if i in (0, 3) else 1) for i in range(6)])

for name, s in [("triangle", triangle), ("hexagon", hexagon)]:
    rep = is_balanced(s)
    print(f"{name}: balanced={rep.balanced} (cut test says {is_balanced_cut(s)})")
    if rep.balanced:
        # Negative edges are exactly those crossing the cut.
        print("  switching set:", sorted(rep.witness_cut))
    else:
        print("  negative circle through edges:", rep.witness_circle.edge_seq)

# A negative loop is a negative circle of length one.
loop = SignedGraph.from_edges(1, [(0, 0, -1)])
print("negative loop balanced:", is_balanced_switching(loop).balanced)
