"""Experiment runner: centrality scores, top-k spreading curves and the
beta/gamma sweeps of Kendall correlation against SIR spreading ability.

Every run writes into its own output directory: a ``manifest.json`` that
echoes the configuration and summarizes the graph, plus the data files.
Nothing time-dependent goes into the outputs, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import json
import logging
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .epidemic import InfectionCurve, SirParams, SpreadScores, spread_all, topk_curve
from .errors import ConfigError, DatasetError
from .graph import Graph, largest_component, read_edge_list
from .ranking import canonical_method, rank_all
from .scores import CentralityScores
from .stats import kendall_tau

log = logging.getLogger(__name__)

DATASET_DOC = "docs/datasets.md"

#: Node and edge counts as reported for the evaluation networks.
DATASETS = {
    "jazz": (198, 2742),
    "ns": (379, 914),
    "pb": (1222, 16714),
    "celegans": (297, 2359),
    "infectious": (410, 17298),
    "pdzbase": (212, 2672),
}

BETA_GRID = tuple(round(0.01 * i, 2) for i in range(1, 11))
GAMMA_GRID = tuple(round(0.1 * i, 1) for i in range(11))
EXPERIMENTS = ("scores", "topk", "beta_sweep", "gamma_sweep")
DEFAULT_METHODS = ("lvid", "lvd", "betweenness", "pagerank", "degree", "gravity")


@dataclass
class ExperimentSpec:
    dataset: str
    experiment: str
    methods: tuple[str, ...] = DEFAULT_METHODS
    k: int = 10
    beta_grid: tuple[float, ...] = BETA_GRID
    gamma_grid: tuple[float, ...] = GAMMA_GRID
    sir: SirParams = field(default_factory=lambda: SirParams(beta=0.05))
    output_dir: str | None = None
    output_format: str = "csv"
    keep_whole_graph: bool = False
    negate_slope: bool = True
    include_self: bool = True
    topk_mode: str = "simultaneous"
    tau_variant: str = "a"
    comment_prefix: str = "#"
    threads: int = 1

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.experiment!r}")
        self.methods = tuple(canonical_method(m) for m in self.methods)
        if not self.methods:
            raise ConfigError("no methods requested")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"unknown output format {self.output_format!r}")
        for name in ("beta_grid", "gamma_grid"):
            grid = tuple(float(x) for x in getattr(self, name))
            if not grid:
                raise ConfigError(f"{name} is empty")
            if any(b <= a for a, b in zip(grid, grid[1:])):
                raise ConfigError(f"{name} must be strictly increasing")
            if grid[0] < 0.0 or grid[-1] > 1.0:
                raise ConfigError(f"{name} must lie within [0, 1]")
            setattr(self, name, grid)
        if self.k < 1:
            raise ConfigError("k must be positive")
        if self.threads < 1:
            raise ConfigError("threads must be positive")

    def echo(self) -> dict:
        d = asdict(self)
        d["sir"] = asdict(self.sir)
        d["methods"] = list(self.methods)
        d["beta_grid"] = list(self.beta_grid)
        d["gamma_grid"] = list(self.gamma_grid)
        # where results land is not part of what was computed
        d.pop("output_dir")
        d.pop("threads")
        return d


@dataclass(frozen=True)
class SweepTable:
    """Kendall tau of each method against spreading ability, per grid value."""

    parameter: str
    grid: tuple[float, ...]
    methods: tuple[str, ...]
    tau: np.ndarray  # (methods, grid)

    def row(self, method: str) -> np.ndarray:
        return self.tau[self.methods.index(method)]

    def cell(self, method: str, value: float) -> float:
        col = min(range(len(self.grid)), key=lambda j: abs(self.grid[j] - value))
        return float(self.tau[self.methods.index(method), col])

    def to_csv(self) -> str:
        lines = [",".join(["method"] + [f"{v:.2f}" for v in self.grid])]
        for m, row in zip(self.methods, self.tau):
            lines.append(",".join([m] + [repr(float(x)) for x in row]))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter,
            "grid": list(self.grid),
            "rows": {m: [float(x) for x in row] for m, row in zip(self.methods, self.tau)},
        }


def dataset_name(path) -> str:
    return Path(path).stem.lower().split(".")[0]


def load_dataset(path, keep_whole_graph: bool = False, comment_prefix: str = "#") -> tuple[Graph, dict]:
    """Read an edge-list dataset, reduce it to its largest component and
    check it against the known counts. Returns the graph and a summary."""
    path = Path(path)
    if not path.is_file():
        raise DatasetError(f"dataset file {str(path)!r} not found; see {DATASET_DOC} for how to obtain it")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        full = read_edge_list(path, comment_prefix=comment_prefix)
    for w in caught:
        log.warning("%s: %s", path.name, w.message)
    summary = {
        "name": dataset_name(path),
        "input_nodes": full.node_count,
        "input_edges": full.edge_count,
        "lines_read": full.summary.edges_read,
        "duplicates_collapsed": full.summary.duplicates,
        "self_loops_dropped": full.summary.self_loops,
    }
    expected = DATASETS.get(summary["name"])
    if expected is not None:
        nodes, edges = expected
        if full.node_count != nodes or edges not in (full.edge_count, full.summary.edges_read):
            warnings.warn(
                f"{path.name}: got {full.node_count} nodes / {full.edge_count} edges "
                f"({full.summary.edges_read} lines), expected {nodes} / {edges}",
                stacklevel=2,
            )
    g = full
    if not keep_whole_graph:
        g, _ = largest_component(full)
    summary["nodes"] = g.node_count
    summary["edges"] = g.edge_count
    summary["largest_component_only"] = not keep_whole_graph
    return g, summary


def score_methods(g: Graph, spec: ExperimentSpec) -> dict[str, CentralityScores]:
    return {
        m: rank_all(g, m, include_self=spec.include_self, negate_slope=spec.negate_slope)
        for m in spec.methods
    }


def _sweep(g: Graph, spec: ExperimentSpec, parameter: str) -> tuple[SweepTable, list[SpreadScores]]:
    scores = score_methods(g, spec)
    grid = spec.beta_grid if parameter == "beta" else spec.gamma_grid
    tau = np.zeros((len(spec.methods), len(grid)))
    spreads = []
    for j, value in enumerate(grid):
        if parameter == "beta":
            params = spec.sir.replace(beta=value)
        else:
            params = spec.sir.replace(gamma=value)
        spread = spread_all(g, params, threads=spec.threads)
        spreads.append(spread)
        for i, m in enumerate(spec.methods):
            tau[i, j] = kendall_tau(scores[m].scores, spread.means, variant=spec.tau_variant)
        log.info("%s=%.2f: %s", parameter, value,
                 ", ".join(f"{m}={t:.3f}" for m, t in zip(spec.methods, tau[:, j])))
    return SweepTable(parameter, grid, spec.methods, tau), spreads


def run_beta_sweep(spec: ExperimentSpec, graph: Graph | None = None) -> SweepTable:
    """Tau per method while beta runs over ``spec.beta_grid`` at ``spec.sir.gamma`` (0 by default)."""
    g = graph if graph is not None else load_dataset(spec.dataset, spec.keep_whole_graph, spec.comment_prefix)[0]
    return _sweep(g, spec, "beta")[0]


def run_gamma_sweep(spec: ExperimentSpec, graph: Graph | None = None) -> SweepTable:
    """Tau per method while gamma runs over ``spec.gamma_grid`` at ``spec.sir.beta``."""
    g = graph if graph is not None else load_dataset(spec.dataset, spec.keep_whole_graph, spec.comment_prefix)[0]
    return _sweep(g, spec, "gamma")[0]


def run_topk(spec: ExperimentSpec, graph: Graph | None = None) -> dict[str, InfectionCurve]:
    """Infection curve seeded by each method's top-``k`` nodes."""
    g = graph if graph is not None else load_dataset(spec.dataset, spec.keep_whole_graph, spec.comment_prefix)[0]
    if spec.k > g.node_count:
        raise ConfigError(f"k={spec.k} exceeds the {g.node_count} nodes of the graph")
    scores = score_methods(g, spec)
    return {
        m: topk_curve(g, scores[m], spec.k, spec.sir, mode=spec.topk_mode, threads=spec.threads)
        for m in spec.methods
    }


def run_scores(spec: ExperimentSpec, graph: Graph | None = None) -> dict[str, CentralityScores]:
    g = graph if graph is not None else load_dataset(spec.dataset, spec.keep_whole_graph, spec.comment_prefix)[0]
    return score_methods(g, spec)


def _write(path: Path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _curves_table(curves: dict[str, InfectionCurve]) -> str:
    methods = list(curves)
    steps = len(next(iter(curves.values())).mean_affected)
    lines = [",".join(["t"] + methods)]
    for t in range(steps):
        lines.append(",".join([str(t)] + [repr(float(curves[m].mean_affected[t])) for m in methods]))
    return "\n".join(lines) + "\n"


def run_experiment(spec: ExperimentSpec, output_dir=None) -> Path:
    """Run ``spec`` end to end and write its outputs; returns the output directory."""
    out = Path(output_dir or spec.output_dir or "runs")
    out.mkdir(parents=True, exist_ok=True)
    g, summary = load_dataset(spec.dataset, spec.keep_whole_graph, spec.comment_prefix)
    as_json = spec.output_format == "json"
    manifest = {"netdim_version": __version__, "spec": spec.echo(), "graph": summary, "files": []}

    def emit(name, csv_text, json_obj):
        fname = f"{name}.json" if as_json else f"{name}.csv"
        _write(out / fname, _dump_json(json_obj) if as_json else csv_text)
        manifest["files"].append(fname)

    if spec.experiment == "scores":
        for m, sc in run_scores(spec, g).items():
            emit(f"scores_{m}", sc.to_csv(), {"method": m, "scores": sc.to_records()})
    elif spec.experiment == "topk":
        curves = run_topk(spec, g)
        for m, c in curves.items():
            emit(f"topk_{m}", c.to_csv(),
                 {"method": m, "seeds": list(c.seeds), "mean_affected": [float(x) for x in c.mean_affected]})
        emit("topk_all", _curves_table(curves),
             {m: [float(x) for x in c.mean_affected] for m, c in curves.items()})
    else:
        parameter = "beta" if spec.experiment == "beta_sweep" else "gamma"
        table, spreads = _sweep(g, spec, parameter)
        emit(f"{parameter}_sweep", table.to_csv(), table.to_json())
        for value, sp in zip(table.grid, spreads):
            emit(f"spread_{parameter}_{value:.2f}", sp.to_csv(),
                 {"params": asdict(sp.params), "mean_affected": [float(x) for x in sp.means]})

    _write(out / "manifest.json", _dump_json(manifest))
    return out


__all__ = [
    "BETA_GRID", "DATASETS", "DEFAULT_METHODS", "ExperimentSpec", "GAMMA_GRID", "SweepTable",
    "load_dataset", "run_beta_sweep", "run_experiment", "run_gamma_sweep", "run_scores", "run_topk",
]
