"""The 27-vertex gadget that tells (P_4, K_3) apart from (P_4, K_3 + pendant).

A K_3 hub carries a depth-1 tree-of-cliques gadget at each vertex.  The
construction ships with a coloring that is free for the pendant pair, while
random sampling finds no free coloring for the plain pair.
"""

from ramseylab import (
    clique_with_pendants,
    coloring_is_free,
    diameter_distinguisher,
    graph_to_graph6,
    path,
    sampled_arrows,
    clique,
)

F, witness = diameter_distinguisher(path(4), t=3)
print(f"F: {F.n} vertices, {F.m} edges")
print("graph6:", graph_to_graph6(F))

pendant_pair = clique_with_pendants(3, 1, 2)
print(
    "shipped coloring free for (P_4, K_3 + pendant):",
    coloring_is_free(F, witness, path(4), pendant_pair),
)
print(f"red edges: {len(witness.red)}, blue edges: {len(witness.blue)}")

# The positive direction F -> (P_4, K_3) is out of exhaustive reach (2^45
# colorings), so hammer it with random colorings instead.
found = sampled_arrows(F, path(4), clique(3), samples=200_000, seed=7)
print("free coloring for (P_4, K_3) in 200k random samples:", found)
