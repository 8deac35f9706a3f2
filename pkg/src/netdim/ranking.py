"""Name-based dispatch over every implemented centrality."""

from __future__ import annotations

from . import baselines, dimension
from .errors import ConfigError
from .graph import Graph
from .scores import CentralityScores

METHODS = ("lvid", "lvd", "betweenness", "pagerank", "degree", "gravity")

_ALIASES = {"bc": "betweenness", "pr": "pagerank", "dc": "degree"}

_OUT_OF_SCOPE = {
    "gg": "generalized gravity (GG)",
    "wg": "weighted gravity (WG)",
}


def canonical_method(name: str) -> str:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key in METHODS:
        return key
    if key in _OUT_OF_SCOPE:
        raise ConfigError(
            f"{_OUT_OF_SCOPE[key]} is not implemented: its formula is not available to this "
            f"package. Use 'gravity' for the classic gravity centrality instead."
        )
    raise ConfigError(f"unknown centrality method {name!r}; choose from {', '.join(METHODS)}")


def rank_all(g: Graph, method: str, *, include_self: bool = True, negate_slope: bool = True,
             damping: float = 0.85, radius: int = 3) -> CentralityScores:
    """Score every node of ``g`` with ``method``.

    ``include_self`` and ``negate_slope`` only affect ``lvd``/``lvid``;
    ``damping`` only PageRank and ``radius`` only gravity.
    """
    key = canonical_method(method)
    if key == "lvid":
        values = dimension.lvid_scores(g, include_self, negate_slope)
    elif key == "lvd":
        values = dimension.lvd_scores(g, include_self, negate_slope)
    elif key == "betweenness":
        values = baselines.betweenness_values(g)
    elif key == "pagerank":
        values = baselines.pagerank_values(g, damping)
    elif key == "gravity":
        values = baselines.gravity_values(g, radius)
    else:
        values = g.degrees.astype(float)
    return CentralityScores(key, values, g.labels)
