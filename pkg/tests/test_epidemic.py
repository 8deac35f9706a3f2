import math
import random
from math import comb

import numpy as np
import pytest

import netdim.epidemic as epi
from netdim.epidemic import (
    SirParams, run_keys, seed_set_key, simulate_once, spread_all, spread_score, topk_curve,
)
from netdim.graph import Graph
from netdim.scores import CentralityScores

from conftest import cycle, path_graph, star
from oracles import random_connected_edges


def _diameter(g):
    from netdim.graph import distance_matrix
    return int(distance_matrix(g).max())


def test_params_validation():
    for bad in [dict(beta=-0.1), dict(beta=1.1), dict(beta=0.1, gamma=2), dict(beta=0.1, steps=0),
                dict(beta=0.1, runs=0)]:
        with pytest.raises(ValueError):
            SirParams(**bad)


def test_no_transmission():
    g = cycle(9)
    counts = simulate_once(g, [3], SirParams(beta=0.0, gamma=0.3, steps=10), run_seed=1)
    assert list(counts) == [1] * 11
    assert spread_score(g, 3, SirParams(beta=0.0)) == 1.0
    assert np.all(spread_all(g, SirParams(beta=0.0, runs=7)).means == 1.0)


def test_flooding():
    rng = random.Random(4)
    g = Graph(15, random_connected_edges(rng, 15, 0.1))
    diam = _diameter(g)
    p = SirParams(beta=1.0, gamma=0.0, steps=diam + 2)
    counts = simulate_once(g, [0], p, run_seed=99)
    assert np.all(counts[diam:] == g.node_count)
    assert spread_score(g, 5, p) == float(g.node_count)


def test_invalid_seed():
    with pytest.raises(IndexError):
        simulate_once(cycle(4), [4], SirParams(beta=0.5), run_seed=0)
    with pytest.raises(ValueError):
        simulate_once(cycle(4), [], SirParams(beta=0.5), run_seed=0)


def test_star_recovery_distribution():
    # centre infects each leaf w.p. 1/2 and then recovers: affected = 1 + Bin(4, 1/2)
    g = star(4)
    p = SirParams(beta=0.5, gamma=1.0, steps=1)
    runs = 20000
    keys = run_keys(123, [0], runs)
    for k in keys[:200]:
        _, recovered = simulate_once(g, [0], p, int(k), with_recovered=True)
        assert recovered[1] == 1
    rows = [(0,)] * runs
    affected, recovered = epi._simulate_batch(g, rows, keys, p)
    assert np.all(recovered[:, 1] == 1)
    observed = np.bincount(affected[:, 1] - 1, minlength=5)
    expected = np.array([comb(4, j) for j in range(5)]) / 16 * runs
    chi2 = float(((observed - expected) ** 2 / expected).sum())
    assert chi2 < 18.47  # 0.999 quantile, 4 dof


def test_star_mean_one_step():
    g = star(4)
    p = SirParams(beta=0.5, gamma=0.0, steps=1, runs=10000, master_seed=7)
    mean = spread_score(g, 0, p)
    se = math.sqrt(4 * 0.25 / p.runs)
    assert abs(mean - 3.0) < 3 * se


def test_star_centre_beats_leaf_two_steps():
    # exact expectations: centre 1 + 4 * 3/4 = 4, leaf 1 + 3/4 + 3/4 = 2.5
    g = star(4)
    p = SirParams(beta=0.5, gamma=0.0, steps=2, runs=4000)
    means = spread_all(g, p).means
    assert means[0] == pytest.approx(4.0, abs=0.1)
    assert np.allclose(means[1:], 2.5, atol=0.1)
    assert means[0] > means[1:].max()


def test_cycle_symmetry():
    g = cycle(10)
    means = spread_all(g, SirParams(beta=0.3, gamma=0.2, steps=10, runs=3000)).means
    assert np.ptp(means) < 0.25


def test_affected_monotone_and_si_has_no_recovered():
    rng = random.Random(8)
    g = Graph(30, random_connected_edges(rng, 30, 0.08))
    keys = run_keys(5, [0], 50)
    for gamma in (0.0, 0.4, 1.0):
        p = SirParams(beta=0.3, gamma=gamma, steps=25)
        affected, recovered = epi._simulate_batch(g, [(0,)] * 50, keys, p)
        assert np.all(np.diff(affected, axis=1) >= 0)
        assert np.all(affected >= 1) and np.all(affected <= g.node_count)
        if gamma == 0.0:
            assert np.all(recovered == 0)
        else:
            assert recovered.max() > 0


def test_spread_means_within_bounds():
    g = path_graph(6)
    means = spread_all(g, SirParams(beta=0.4, gamma=0.3, runs=50)).means
    assert np.all((means >= 1) & (means <= 6))


def test_simulate_once_matches_batched_runs():
    rng = random.Random(1)
    g = Graph(20, random_connected_edges(rng, 20, 0.15))
    p = SirParams(beta=0.2, gamma=0.3, steps=12, runs=30, master_seed=42)
    keys = run_keys(p.master_seed, [4], p.runs)
    single = [simulate_once(g, [4], p, int(k))[-1] for k in keys]
    assert spread_score(g, 4, p) == sum(single) / p.runs
    assert spread_all(g, p).means[4] == spread_score(g, 4, p)


def test_determinism_across_threads_and_chunking(monkeypatch):
    rng = random.Random(2)
    g = Graph(40, random_connected_edges(rng, 40, 0.1))
    p = SirParams(beta=0.15, gamma=0.2, runs=20)
    base = spread_all(g, p).means
    monkeypatch.setattr(epi, "_CHUNK_CELLS", 40 * 20 * 3)
    for threads in (1, 8):
        assert np.array_equal(spread_all(g, p, threads=threads).means, base)


def test_seed_key_is_order_independent():
    assert seed_set_key([3, 1, 2]) == seed_set_key((1, 2, 3))
    assert seed_set_key([1]) != seed_set_key([2])
    assert not np.array_equal(run_keys(1, [0], 4), run_keys(2, [0], 4))


def test_master_seed_changes_results():
    g = cycle(12)
    a = spread_all(g, SirParams(beta=0.3, runs=20, master_seed=1)).means
    b = spread_all(g, SirParams(beta=0.3, runs=20, master_seed=2)).means
    assert not np.array_equal(a, b)


def test_topk_examples():
    g = cycle(12)
    scores = CentralityScores("x", np.arange(12, dtype=float))
    full = topk_curve(g, scores, 12, SirParams(beta=0.5, steps=5, runs=10))
    assert np.all(full.mean_affected == 12)
    flat = topk_curve(g, scores, 10, SirParams(beta=0.0, steps=5, runs=10))
    assert np.all(flat.mean_affected == 10)
    assert flat.seeds == tuple(range(11, 1, -1))
    assert list(flat.time) == list(range(6))


def test_topk_per_seed_mode():
    g = star(4)
    scores = CentralityScores("degree", g.degrees.astype(float))
    p = SirParams(beta=0.0, steps=3, runs=5)
    curve = topk_curve(g, scores, 3, p, mode="per-seed")
    assert np.all(curve.mean_affected == 1.0)
    with pytest.raises(ValueError):
        topk_curve(g, scores, 3, p, mode="other")
    with pytest.raises(ValueError):
        topk_curve(g, scores, 6, p)


def test_csv_outputs():
    g = path_graph(3)
    sp = spread_all(g, SirParams(beta=0.0, runs=2))
    assert sp.to_csv() == "node,mean_affected\n0,1.0\n1,1.0\n2,1.0\n"
    scores = CentralityScores("x", [0.0, 1.0, 0.0])
    curve = topk_curve(g, scores, 1, SirParams(beta=0.0, steps=2, runs=2))
    assert curve.to_csv() == "t,mean_affected\n0,1.0\n1,1.0\n2,1.0\n"
