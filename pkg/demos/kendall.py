"""
Kendall tau with ties
=====================

tau-a divides by every pair, so ties pull it toward zero; tau-b rescales.
"""

import numpy as np

from netdim.stats import kendall_counts, kendall_tau

x = np.array([1, 2, 2, 3, 4, 4, 4, 5])
y = np.array([1, 3, 2, 2, 5, 4, 6, 7])

print("concordant, discordant, ties in x, ties in y:", kendall_counts(x, y))
print("tau-a", round(kendall_tau(x, y), 4))
print("tau-b", round(kendall_tau(x, y, variant="b"), 4))

# %%
# The merge-sort count handles large inputs quickly.
rng = np.random.default_rng(0)
a = rng.integers(0, 100, 200_000)
b = a + rng.normal(0, 30, a.size)
print("n=200000 tau-a", round(kendall_tau(a, b), 4))
