"""Undirected simple graphs: parsing, BFS distances, components.

Graphs are immutable once built. Node ids are the dense range
``0..node_count-1``; original file labels, when present, are kept in
``Graph.labels``.
"""

from __future__ import annotations

import io
import os
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .errors import EmptyGraphError, ParseError

#: Distance value for nodes outside the source's component.
UNREACHABLE = -1


@dataclass(frozen=True)
class ParseSummary:
    lines: int
    edges_read: int
    duplicates: int
    self_loops: int


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    node_count
        Number of nodes; ids are ``0..node_count-1``.
    edges
        Iterable of ``(u, v)`` pairs. Duplicates (in either orientation) are
        collapsed and self-loops are dropped.
    labels
        Optional original label for each node id.
    """

    __slots__ = ("_n", "_adj", "_deg", "_m", "_labels", "_csr", "summary")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None, summary: ParseSummary | None = None):
        if node_count < 0:
            raise ValueError("node_count must be nonnegative")
        neigh: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {node_count} nodes")
            if u == v:
                continue
            neigh[u].add(v)
            neigh[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != node_count:
                raise ValueError("labels must have one entry per node")
        self._n = node_count
        self._adj = tuple(tuple(sorted(s)) for s in neigh)
        deg = np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=node_count)
        deg.setflags(write=False)
        self._deg = deg
        self._m = int(deg.sum()) // 2
        self._labels = labels
        self._csr = None
        self.summary = summary

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor ids per node."""
        return self._adj

    @property
    def degrees(self) -> np.ndarray:
        """Read-only degree array."""
        return self._deg

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def total_degree(self) -> int:
        return 2 * self._m

    def label(self, node: int) -> str:
        return self._labels[node] if self._labels is not None else str(node)

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def to_csr(self) -> sparse.csr_matrix:
        """Adjacency matrix as a (cached) CSR matrix of float64 ones."""
        if self._csr is None:
            indptr = np.zeros(self._n + 1, dtype=np.int64)
            np.cumsum(self._deg, out=indptr[1:])
            indices = np.fromiter((v for nbrs in self._adj for v in nbrs),
                                  dtype=np.int64, count=int(indptr[-1]))
            data = np.ones(len(indices), dtype=np.float64)
            self._csr = sparse.csr_matrix((data, indices, indptr), shape=(self._n, self._n))
        return self._csr

    def check_node(self, node: int) -> int:
        if not 0 <= node < self._n:
            raise IndexError(f"node {node} out of range [0, {self._n})")
        return int(node)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return f"Graph(node_count={self._n}, edge_count={self._m})"


def _lines(source):
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def parse_edge_list(source, allow_labels: bool = True, comment_prefix: str = "#") -> Graph:
    """Parse a whitespace-separated edge list into a :class:`Graph`.

    ``source`` is a string or any iterable of text lines. Tokens after the
    first two on a line (weights, timestamps) are ignored, so directed or
    weighted files are read as undirected and unweighted.

    With ``allow_labels`` every token is an opaque label and ids are assigned
    in first-appearance order. Without it, tokens must be nonnegative
    integers and are used as ids directly.
    """
    ids: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    max_id = -1
    lineno = 0
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or (comment_prefix and line.startswith(comment_prefix)):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError("expected two endpoint tokens", lineno)
        a, b = tokens[0], tokens[1]
        if allow_labels:
            u = ids.setdefault(a, len(ids))
            v = ids.setdefault(b, len(ids))
        else:
            try:
                u, v = int(a), int(b)
            except ValueError:
                raise ParseError(f"non-integer node id in {a!r} {b!r}", lineno) from None
            if u < 0 or v < 0:
                raise ParseError("negative node id", lineno)
            max_id = max(max_id, u, v)
        pairs.append((u, v))
    if not pairs:
        raise EmptyGraphError("edge list contains no edges")

    self_loops = sum(1 for u, v in pairs if u == v)
    distinct = {(min(u, v), max(u, v)) for u, v in pairs if u != v}
    duplicates = len(pairs) - self_loops - len(distinct)
    if self_loops:
        warnings.warn(f"dropped {self_loops} self-loop(s)", stacklevel=2)
    summary = ParseSummary(lines=lineno, edges_read=len(pairs),
                           duplicates=duplicates, self_loops=self_loops)
    if allow_labels:
        labels = list(ids)
        return Graph(len(labels), distinct, labels=labels, summary=summary)
    return Graph(max_id + 1, distinct, summary=summary)


def read_edge_list(path, allow_labels: bool = True, comment_prefix: str = "#") -> Graph:
    with open(os.fspath(path), encoding="utf-8") as fh:
        return parse_edge_list(fh, allow_labels=allow_labels, comment_prefix=comment_prefix)


def format_edge_list(g: Graph, use_labels: bool = False) -> str:
    """Serialize ``g`` as ``"u v\\n"`` lines, one per edge."""
    name = g.label if use_labels else str
    return "".join(f"{name(u)} {name(v)}\n" for u, v in g.edges())


@dataclass(frozen=True)
class DistanceField:
    source: int
    dist: np.ndarray

    def reachable(self) -> np.ndarray:
        return self.dist != UNREACHABLE


def bfs_distances(g: Graph, source: int) -> DistanceField:
    """Unweighted shortest-path lengths from ``source``."""
    source = g.check_node(source)
    dist = np.full(g.node_count, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    adj = g.adjacency
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return DistanceField(source, dist)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances, ``UNREACHABLE`` across components."""
    if g.node_count == 0:
        return np.zeros((0, 0), dtype=np.int64)
    d = csgraph.shortest_path(g.to_csr(), method="D", directed=False, unweighted=True)
    out = np.full(d.shape, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(d)
    out[finite] = d[finite].astype(np.int64)
    return out


def eccentricity(g: Graph, node: int) -> int:
    """Largest finite distance from ``node``; 0 for an isolated node."""
    return int(bfs_distances(g, node).dist.max())


def connected_components(g: Graph) -> list[np.ndarray]:
    """Components as sorted id arrays, ordered by their smallest id."""
    if g.node_count == 0:
        return []
    _, comp = csgraph.connected_components(g.to_csr(), directed=False)
    groups: dict[int, list[int]] = {}
    for node, c in enumerate(comp):
        groups.setdefault(int(c), []).append(node)
    return sorted((np.array(v, dtype=np.int64) for v in groups.values()), key=lambda a: a[0])


def induced_subgraph(g: Graph, nodes) -> tuple[Graph, dict[int, int]]:
    nodes = sorted(int(x) for x in nodes)
    mapping = {old: new for new, old in enumerate(nodes)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges() if u in mapping and v in mapping]
    labels = [g.labels[i] for i in nodes] if g.labels is not None else None
    return Graph(len(nodes), edges, labels=labels, summary=g.summary), mapping


def largest_component(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the largest component and the old->new id map.

    Ties go to the component containing the smallest node id. Labels are
    carried over; a graph without labels gets its original ids as labels so
    output files still refer to the input numbering.
    """
    comps = connected_components(g)
    if not comps:
        raise EmptyGraphError("graph has no nodes")
    best = max(comps, key=lambda c: (len(c), -c[0]))
    if len(best) == g.node_count:
        return g, {i: i for i in range(g.node_count)}
    sub, mapping = induced_subgraph(g, best)
    if g.labels is None:
        sub = Graph(sub.node_count, sub.edges(), labels=[str(i) for i in sorted(mapping)],
                    summary=sub.summary)
    return sub, mapping


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1
