"""Discrete-time SIR Monte Carlo on undirected graphs.

One step of the dynamics, applied to every run in lockstep:

1. each infected node independently infects each susceptible neighbour
   with probability ``beta`` (a node with ``k`` infected neighbours is
   therefore infected with probability ``1 - (1 - beta)**k``);
2. each node that was infected before the step recovers with probability
   ``gamma``;
3. newly infected nodes start transmitting at the next step.

Recovered nodes stay immune. With ``gamma = 0`` this is the SI model.

Random numbers are not drawn from a stateful generator. Every draw is a
hash of ``(run key, step, phase, node)``, and the run key is a hash of
``(master_seed, seed set, run index)``. Results are therefore identical
however runs are batched or spread over threads.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .scores import CentralityScores

DEFAULT_SEED = 20210611

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
_MUL2 = np.uint64(0x94D049BB133111EB)
_U53 = 1.0 / (1 << 53)

# rows * node_count cells per batch
_CHUNK_CELLS = 1 << 21


def _mix64(z: np.ndarray) -> np.ndarray:
    """splitmix64 output function, elementwise on uint64."""
    z = np.asarray(z, dtype=np.uint64) + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MUL1
    z = (z ^ (z >> np.uint64(27))) * _MUL2
    return z ^ (z >> np.uint64(31))


def _u64(x: int) -> np.ndarray:
    return np.array([int(x) & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)


def seed_set_key(seeds) -> int:
    """Order-independent 64-bit key for a set of seed nodes."""
    with np.errstate(over="ignore"):
        h = _mix64(_u64(len(seeds)))
        for s in sorted(int(x) for x in seeds):
            h = _mix64(h ^ _u64(s))
    return int(h[0])


def run_keys(master_seed: int, seeds, runs: int) -> np.ndarray:
    """Per-run keys for ``runs`` simulations seeded at ``seeds``."""
    with np.errstate(over="ignore"):
        base = _mix64(_mix64(_u64(master_seed)) ^ _u64(seed_set_key(seeds)))
        return _mix64(base + np.arange(runs, dtype=np.uint64))


def _uniforms(keys: np.ndarray, counters: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        z = _mix64(keys ^ _mix64(counters))
    return (z >> np.uint64(11)).astype(np.float64) * _U53


@dataclass(frozen=True)
class SirParams:
    beta: float
    gamma: float = 0.0
    steps: int = 25
    runs: int = 100
    master_seed: int = DEFAULT_SEED

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma}")
        if self.steps < 1 or self.runs < 1:
            raise ValueError("steps and runs must be positive")

    def replace(self, **changes) -> "SirParams":
        fields = dict(beta=self.beta, gamma=self.gamma, steps=self.steps,
                      runs=self.runs, master_seed=self.master_seed)
        fields.update(changes)
        return SirParams(**fields)


def _simulate_batch(g: Graph, seed_rows: list, keys: np.ndarray, p: SirParams) -> tuple[np.ndarray, np.ndarray]:
    """Run one simulation per row; row ``r`` starts from ``seed_rows[r]``.

    Returns ``(affected, recovered)`` counts of shape ``(rows, steps + 1)``.
    """
    n = g.node_count
    rows = len(keys)
    adj = g.to_csr().astype(np.float32)
    # state arrays are (node, run) so the sparse product needs no transpose
    infected = np.zeros((n, rows), dtype=bool)
    for r, seeds in enumerate(seed_rows):
        infected[list(seeds), r] = True
    affected = infected.copy()
    affected_counts = np.zeros((rows, p.steps + 1), dtype=np.int64)
    recovered_counts = np.zeros((rows, p.steps + 1), dtype=np.int64)
    affected_counts[:, 0] = affected.sum(axis=0)
    max_deg = int(g.degrees.max()) if n else 0
    infect_prob = 1.0 - (1.0 - p.beta) ** np.arange(max_deg + 1)
    node_ids = np.arange(n, dtype=np.uint64)

    for t in range(1, p.steps + 1):
        if not infected.any():
            affected_counts[:, t:] = affected_counts[:, t - 1:t]
            recovered_counts[:, t:] = recovered_counts[:, t - 1:t]
            break
        pressure = adj @ infected.astype(np.float32)
        v, r = np.nonzero((pressure > 0) & ~affected)
        counter = np.uint64(2 * t * n) + node_ids
        hit = _uniforms(keys[r], counter[v]) < infect_prob[pressure[v, r].astype(np.int64)]
        new_v, new_r = v[hit], r[hit]

        if p.gamma > 0.0:
            iv, ir = np.nonzero(infected)
            counter = np.uint64((2 * t + 1) * n) + node_ids
            rec = _uniforms(keys[ir], counter[iv]) < p.gamma
            infected[iv[rec], ir[rec]] = False

        infected[new_v, new_r] = True
        affected[new_v, new_r] = True
        affected_counts[:, t] = affected_counts[:, t - 1] + np.bincount(new_r, minlength=rows)
        recovered_counts[:, t] = affected_counts[:, t] - infected.sum(axis=0)
    return affected_counts, recovered_counts


def _check_seeds(g: Graph, seeds) -> tuple[int, ...]:
    seeds = tuple(sorted({int(s) for s in seeds}))
    if not seeds:
        raise ValueError("need at least one seed node")
    for s in seeds:
        g.check_node(s)
    return seeds


def simulate_once(g: Graph, seeds, p: SirParams, run_seed: int, with_recovered: bool = False):
    """Affected count ``|I| + |R|`` at ``t = 0..steps`` for one run.

    ``run_seed`` is the run's 64-bit key; :func:`run_keys` derives the keys
    used by the averaging functions. With ``with_recovered`` the recovered
    count per step is returned as a second array.
    """
    seeds = _check_seeds(g, seeds)
    affected, recovered = _simulate_batch(g, [seeds], _u64(run_seed), p)
    if with_recovered:
        return affected[0], recovered[0]
    return affected[0]


def _run_many(g: Graph, seed_sets: list, p: SirParams, threads: int) -> np.ndarray:
    """Summed affected trajectories, one row per seed set, each over ``p.runs`` runs."""
    per_chunk = max(1, _CHUNK_CELLS // max(1, g.node_count * p.runs))
    chunks = [seed_sets[i:i + per_chunk] for i in range(0, len(seed_sets), per_chunk)]

    def work(chunk):
        keys = np.concatenate([run_keys(p.master_seed, s, p.runs) for s in chunk])
        rows = [s for s in chunk for _ in range(p.runs)]
        affected, _ = _simulate_batch(g, rows, keys, p)
        return affected.reshape(len(chunk), p.runs, -1).sum(axis=1)

    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, chunks))
    else:
        parts = [work(c) for c in chunks]
    return np.concatenate(parts) if parts else np.zeros((0, p.steps + 1), dtype=np.int64)


def spread_score(g: Graph, seed: int, p: SirParams) -> float:
    """Mean final affected count over ``p.runs`` runs seeded at ``seed``."""
    seeds = _check_seeds(g, [seed])
    return float(_run_many(g, [seeds], p, 1)[0, -1] / p.runs)


@dataclass(frozen=True)
class SpreadScores:
    means: np.ndarray
    params: SirParams

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["node", "mean_affected"])
        for node, m in enumerate(self.means):
            w.writerow([node, repr(float(m))])
        return buf.getvalue()


def spread_all(g: Graph, p: SirParams, threads: int = 1) -> SpreadScores:
    """Spreading ability of every node used as the single initial seed."""
    totals = _run_many(g, [(s,) for s in range(g.node_count)], p, threads)
    return SpreadScores(totals[:, -1] / p.runs, p)


@dataclass(frozen=True)
class InfectionCurve:
    mean_affected: np.ndarray  # index t = 0..steps
    seeds: tuple[int, ...]
    params: SirParams

    @property
    def time(self) -> np.ndarray:
        return np.arange(len(self.mean_affected))

    def to_csv(self) -> str:
        lines = ["t,mean_affected"]
        lines += [f"{t},{float(m)!r}" for t, m in enumerate(self.mean_affected)]
        return "\n".join(lines) + "\n"


def topk_curve(g: Graph, scores: CentralityScores, k: int, p: SirParams,
               mode: str = "simultaneous", threads: int = 1) -> InfectionCurve:
    """Mean affected trajectory seeded by the ``k`` top-ranked nodes.

    ``mode="simultaneous"`` infects all ``k`` nodes at ``t = 0``.
    ``mode="per-seed"`` instead averages the single-seed trajectories of
    the ``k`` nodes.
    """
    if not 1 <= k <= g.node_count:
        raise ValueError(f"k must lie in [1, {g.node_count}], got {k}")
    seeds = tuple(int(s) for s in scores.top(k))
    if mode == "simultaneous":
        totals = _run_many(g, [tuple(sorted(seeds))], p, threads)[0]
        mean = totals / p.runs
    elif mode == "per-seed":
        totals = _run_many(g, [(s,) for s in seeds], p, threads)
        mean = totals.sum(axis=0) / (p.runs * k)
    else:
        raise ValueError(f"unknown top-k mode {mode!r}")
    return InfectionCurve(mean, seeds, p)
