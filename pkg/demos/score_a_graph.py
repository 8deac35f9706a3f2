"""
Ranking nodes by local volume dimension
=======================================

Two triangles and a square-ish cluster joined by short bridges.
"""

from netdim import Graph, lvid_score, rank_all, volume_profile

edges = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (6, 7), (7, 8), (8, 9),
         (7, 9), (1, 10), (10, 11)]
g = Graph(12, edges)

# %%
# The volume of node 4 at radius l is the degree mass within l hops.
prof = volume_profile(g, 4)
print("radii  ", prof.radii.tolist())
print("volumes", prof.volumes.tolist(), "of", prof.total_degree)

# %%
print("lvid(4) =", round(lvid_score(g, 4).score, 4))

for method in ("lvid", "lvd", "betweenness", "degree"):
    scores = rank_all(g, method)
    print(f"{method:12s} top 3:", scores.top(3).tolist())

# %%
# Whole ranking as CSV
print(rank_all(g, "lvid").to_csv())
