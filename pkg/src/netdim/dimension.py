"""Local volume dimension (LVD) and local volume information dimension (LVID).

For a node ``i`` the local volume ``s_i(l)`` is the total degree of all
nodes at hop distance at most ``l``. LVD is the negated slope of
``ln s_i(l)`` against ``ln l``; LVID regresses the entropy term
``-(s/S) ln(s/S)`` against ``ln l`` instead, where ``S`` is the degree total
of the whole network. Both use every ``l`` from 1 to the node's
eccentricity.

Nodes with eccentricity below 2 give fewer than two regression points.
They receive the smallest proper score in the graph minus one, so they
rank last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFitError, DegenerateProfileError
from .graph import UNREACHABLE, Graph, bfs_distances, distance_matrix
from .stats import fit_slope

LVD = "lvd"
LVID = "lvid"


@dataclass(frozen=True)
class VolumeProfile:
    node: int
    volumes: np.ndarray  # volumes[l - 1] = s_i(l)
    total_degree: int

    @property
    def radii(self) -> np.ndarray:
        return np.arange(1, len(self.volumes) + 1)


@dataclass(frozen=True)
class DimensionScore:
    node: int
    score: float
    method: str
    points_used: int

    @property
    def degenerate(self) -> bool:
        return self.points_used < 2


def _profile_from_dist(g: Graph, node: int, dist: np.ndarray, include_self: bool) -> VolumeProfile:
    mask = dist != UNREACHABLE
    if not include_self:
        mask &= dist != 0
    ecc = int(dist.max())
    if ecc == 0:
        raise DegenerateProfileError(f"node {node} is isolated")
    shell = np.bincount(dist[mask], weights=g.degrees[mask], minlength=ecc + 1)
    volumes = np.cumsum(shell)[1:].astype(np.int64)
    return VolumeProfile(node, volumes, g.total_degree)


def volume_profile(g: Graph, node: int, include_self: bool = True) -> VolumeProfile:
    """``s_i(l)`` for ``l = 1..eccentricity(node)``.

    With ``include_self`` (the default) the node's own degree is part of
    every volume, since it lies at distance ``0 <= l``.
    """
    node = g.check_node(node)
    return _profile_from_dist(g, node, bfs_distances(g, node).dist, include_self)


def entropy_term(s: float, total: float) -> float:
    """``-p ln p`` with ``p = s / total``; exactly 0 when ``s == total``."""
    if not (s > 0 and total > 0 and s <= total):
        raise ValueError(f"entropy term needs 0 < s <= S, got s={s}, S={total}")
    if s == total:
        return 0.0
    p = s / total
    return -p * math.log(p)


def _regression_points(profile: VolumeProfile, method: str) -> np.ndarray:
    x = np.log(profile.radii.astype(np.float64))
    vols = profile.volumes.astype(np.float64)
    if method == LVD:
        y = np.log(vols)
    elif method == LVID:
        y = np.array([entropy_term(s, profile.total_degree) for s in profile.volumes])
    else:
        raise ValueError(f"not a dimension method: {method!r}")
    return np.column_stack([x, y])


def _raw_score(profile: VolumeProfile, method: str, negate_slope: bool) -> float:
    slope, _ = fit_slope(_regression_points(profile, method))
    return -slope if negate_slope else slope


def _dimension_scores(g: Graph, method: str, include_self: bool, negate_slope: bool) -> tuple[np.ndarray, np.ndarray]:
    dist = distance_matrix(g)
    raw = np.full(g.node_count, np.nan)
    points = np.zeros(g.node_count, dtype=np.int64)
    for i in range(g.node_count):
        try:
            profile = _profile_from_dist(g, i, dist[i], include_self)
        except DegenerateProfileError:
            continue
        points[i] = len(profile.volumes)
        try:
            raw[i] = _raw_score(profile, method, negate_slope)
        except DegenerateFitError:
            pass
    return _fill_degenerate(raw), points


def _fill_degenerate(raw: np.ndarray) -> np.ndarray:
    finite = np.isfinite(raw)
    floor = (raw[finite].min() if finite.any() else 0.0) - 1.0
    return np.where(finite, raw, floor)


def _score_one(g: Graph, node: int, method: str, include_self: bool, negate_slope: bool) -> DimensionScore:
    node = g.check_node(node)
    try:
        profile = volume_profile(g, node, include_self)
        points = len(profile.volumes)
        return DimensionScore(node, _raw_score(profile, method, negate_slope), method, points)
    except DegenerateProfileError:
        points = 0
    except DegenerateFitError:
        points = 1
    scores, _ = _dimension_scores(g, method, include_self, negate_slope)
    return DimensionScore(node, float(scores[node]), method, points)


def lvd_score(g: Graph, node: int, include_self: bool = True, negate_slope: bool = True) -> DimensionScore:
    """Negated slope of ``ln s_i(l)`` regressed on ``ln l``."""
    return _score_one(g, node, LVD, include_self, negate_slope)


def lvid_score(g: Graph, node: int, include_self: bool = True, negate_slope: bool = True) -> DimensionScore:
    """Negated slope of ``-(s_i(l)/S) ln(s_i(l)/S)`` regressed on ``ln l``."""
    return _score_one(g, node, LVID, include_self, negate_slope)


def lvd_scores(g: Graph, include_self: bool = True, negate_slope: bool = True) -> np.ndarray:
    """LVD for every node, degenerate nodes filled in."""
    return _dimension_scores(g, LVD, include_self, negate_slope)[0]


def lvid_scores(g: Graph, include_self: bool = True, negate_slope: bool = True) -> np.ndarray:
    """LVID for every node, degenerate nodes filled in."""
    return _dimension_scores(g, LVID, include_self, negate_slope)[0]
