"""Node importance from local volume information dimension."""

__version__ = "0.1.0"

from .baselines import betweenness, degree_centrality, gravity, pagerank
from .dimension import (
    DimensionScore, VolumeProfile, entropy_term, lvd_score, lvd_scores, lvid_score, lvid_scores,
    volume_profile,
)
from .epidemic import (
    InfectionCurve, SirParams, SpreadScores, simulate_once, spread_all, spread_score, topk_curve,
)
from .graph import (
    UNREACHABLE, DistanceField, Graph, bfs_distances, distance_matrix, eccentricity,
    format_edge_list, largest_component, parse_edge_list, read_edge_list,
)
from .ranking import METHODS, rank_all
from .scores import CentralityScores
from .stats import fit_slope, kendall_tau

__all__ = [
    "CentralityScores", "DimensionScore", "DistanceField", "Graph", "InfectionCurve", "METHODS",
    "SirParams", "SpreadScores", "UNREACHABLE", "VolumeProfile", "betweenness", "bfs_distances",
    "degree_centrality", "distance_matrix", "eccentricity", "entropy_term", "fit_slope",
    "format_edge_list", "gravity", "kendall_tau", "largest_component", "lvd_score", "lvd_scores",
    "lvid_score", "lvid_scores", "pagerank", "parse_edge_list", "rank_all", "read_edge_list",
    "simulate_once", "spread_all", "spread_score", "topk_curve", "volume_profile",
]
