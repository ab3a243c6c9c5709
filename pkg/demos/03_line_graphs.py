"""The vertex-signed line graph and what a consistent marking looks like."""
from sgline import SignedGraph, is_consistent_bruteforce, line_graph, serialize_vertex_signed_graph

star = SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, -1), (0, 3, -1)])
res = line_graph(star)
print("line graph of the claw, in vsign format:")
print(serialize_vertex_signed_graph(res.lg), end="")
print("vertex i of the line graph comes from edge", res.vertex_origin)

# The only circle is the triangle, carrying two negative marks: consistent.
print("consistent:", is_consistent_bruteforce(res.lg).consistent)

# Flip one positive edge and the triangle picks up three negatives.
flipped = SignedGraph.from_edges(4, [(0, 1, -1), (0, 2, -1), (0, 3, -1)])
out = is_consistent_bruteforce(line_graph(flipped).lg)
print("after flipping edge 0:", out.consistent, "witness", out.witness.edge_seq)
