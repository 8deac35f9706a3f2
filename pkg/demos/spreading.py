"""
SIR spreading from single nodes and from top-k seed sets
========================================================
"""

import numpy as np

from netdim import Graph, SirParams, kendall_tau, rank_all, spread_all, topk_curve

rng = np.random.default_rng(7)
n = 60
# ring lattice plus a few random chords
edges = [(i, (i + d) % n) for i in range(n) for d in (1, 2)]
edges += [tuple(rng.choice(n, 2, replace=False)) for _ in range(15)]
g = Graph(n, edges)

p = SirParams(beta=0.08, gamma=0.2, steps=25, runs=200)
spread = spread_all(g, p)
print("mean affected, best five:", np.sort(spread.means)[::-1][:5].round(2))

# %%
# How well does each ranking order nodes by their own spreading power?
for method in ("lvid", "lvd", "degree", "pagerank"):
    tau = kendall_tau(rank_all(g, method).scores, spread.means)
    print(f"{method:9s} tau = {tau:.3f}")

# %%
# Seeding the ten best nodes at once
curve = topk_curve(g, rank_all(g, "lvid"), 10, p)
for t, v in zip(curve.time[::5], curve.mean_affected[::5]):
    print(f"t={t:2d} affected={v:6.2f}")
