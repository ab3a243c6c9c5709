"""Deciding line consistency of a small signed graph.

Run with ``python3 demos/01_checking_a_graph.py``.
"""
from itertools import combinations

from sgline import Graph, SignedGraph, is_line_consistent, is_line_consistent_oracle, parse_signed_graph

# %% A square with two adjacent negative edges, read from sg text.
square = parse_signed_graph("""\
# C4, edges 0 and 1 negative
vertices 4
edge 0 0 1 -
edge 1 1 2 -
edge 2 2 3 +
edge 3 3 0 +
""")
report = is_line_consistent(square)
print("square balanced:", report.balanced)
print("square local property:", report.property_ok)
print("square line-consistent:", report.line_consistent)

# The brute-force oracle builds the line graph and hunts for a negative circle.
print("oracle agrees:", is_line_consistent_oracle(square) == report.line_consistent)

# %% K4 with a single negative edge: unbalanced, and both endpoints fail locally.
k4 = Graph(4, [(e, u, v) for e, (u, v) in enumerate(combinations(range(4), 2))])
one_negative = SignedGraph(k4, {e: -1 if e == 0 else 1 for e in k4.edge_ids})
report = is_line_consistent(one_negative)
print("\nK4 balanced:", report.balanced, " line-consistent:", report.line_consistent)
for v in report.violations:
    print(f"  vertex {v.vertex}: degree {v.degree}, negative degree {v.negative_degree}, clause {v.p2_clause}")
