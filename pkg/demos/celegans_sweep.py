"""
beta sweep on the C. elegans neural network
===========================================

Needs ``datasets/celegans.txt``; docs/datasets.md explains how to get it.
About a minute per full sweep on one core; ``THREADS`` uses more.
"""

import sys
from pathlib import Path

from netdim.harness import ExperimentSpec, load_dataset, run_beta_sweep

THREADS = 4
path = Path(__file__).resolve().parent.parent / "datasets" / "celegans.txt"
if not path.exists():
    sys.exit(f"missing {path}; see docs/datasets.md")

g, summary = load_dataset(path)
print(summary)

spec = ExperimentSpec(str(path), "beta_sweep", methods=("lvid", "lvd", "degree"),
                      beta_grid=(0.01, 0.04, 0.07, 0.10), threads=THREADS)
table = run_beta_sweep(spec, g)
print(table.to_csv())
