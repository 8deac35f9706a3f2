"""Comparison centralities: betweenness, PageRank, degree and gravity.

The gravity score is the classic form ``sum k_i k_j / d_ij^2`` over nodes
within a cutoff radius. It is not the generalized or weighted gravity
variant, and is labelled ``gravity`` everywhere to keep that clear.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import ConvergenceError
from .graph import UNREACHABLE, Graph, distance_matrix
from .scores import CentralityScores


def _single_source_dependency(adj, source: int, n: int) -> list[float]:
    dist = [-1] * n
    sigma = [0] * n
    dist[source] = 0
    sigma[source] = 1
    order = []
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
            if dist[w] == dv:
                sigma[w] += sigma[v]
    delta = [0.0] * n
    for w in reversed(order):
        dw = dist[w] - 1
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in adj[w]:
            if dist[v] == dw:
                delta[v] += sigma[v] * coeff
    delta[source] = 0.0
    return delta


def betweenness_values(g: Graph) -> np.ndarray:
    """Unnormalized betweenness, each unordered pair counted once."""
    n = g.node_count
    adj = g.adjacency
    total = np.zeros(n)
    for s in range(n):
        total += _single_source_dependency(adj, s, n)
    return total / 2.0


def betweenness(g: Graph) -> CentralityScores:
    """Shortest-path betweenness by Brandes' dependency accumulation."""
    return CentralityScores("betweenness", betweenness_values(g), g.labels)


def pagerank_values(g: Graph, damping: float = 0.85, tol: float = 1e-10, max_iter: int = 200) -> np.ndarray:
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must lie in (0, 1), got {damping}")
    n = g.node_count
    if n == 0:
        return np.zeros(0)
    deg = g.degrees.astype(np.float64)
    dangling = deg == 0
    inv_deg = np.divide(1.0, deg, out=np.zeros(n), where=~dangling)
    adj = g.to_csr()
    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        spread = adj @ (x * inv_deg)
        new = damping * (spread + x[dangling].sum() / n) + (1.0 - damping) / n
        err = np.abs(new - x).sum()
        x = new
        if err < tol:
            return x / x.sum()
    raise ConvergenceError(f"PageRank did not converge in {max_iter} iterations", last_iterate=x)


def pagerank(g: Graph, damping: float = 0.85, tol: float = 1e-10, max_iter: int = 200) -> CentralityScores:
    """Power-iteration PageRank on the undirected random walk.

    Raises :class:`ConvergenceError` (with the last iterate attached) when the
    L1 change is still above ``tol`` after ``max_iter`` sweeps.
    """
    return CentralityScores("pagerank", pagerank_values(g, damping, tol, max_iter), g.labels)


def gravity_values(g: Graph, radius: int = 3, dist: np.ndarray | None = None) -> np.ndarray:
    if radius < 1:
        raise ValueError("radius must be at least 1")
    if dist is None:
        dist = distance_matrix(g)
    deg = g.degrees.astype(np.float64)
    within = (dist > 0) & (dist <= radius) & (dist != UNREACHABLE)
    inv_sq = np.zeros(dist.shape)
    inv_sq[within] = 1.0 / dist[within].astype(np.float64) ** 2
    return deg * (inv_sq @ deg)


def gravity(g: Graph, radius: int = 3) -> CentralityScores:
    """Classic gravity centrality with a hop cutoff of ``radius``."""
    return CentralityScores("gravity", gravity_values(g, radius), g.labels)


def degree_centrality(g: Graph) -> CentralityScores:
    return CentralityScores("degree", g.degrees.astype(np.float64), g.labels)
