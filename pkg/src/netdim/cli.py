"""``netdim`` command line.

Exit codes: 0 success, 1 usage or configuration error, 2 I/O error,
3 numerical or convergence error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .epidemic import DEFAULT_SEED, SirParams
from .errors import ConfigError, ConvergenceError, DegenerateFitError, EmptyGraphError, ParseError
from .harness import BETA_GRID, DEFAULT_METHODS, GAMMA_GRID, ExperimentSpec, run_experiment

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NUMERIC = 0, 1, 2, 3

_COMMANDS = {
    "scores": "scores",
    "topk": "topk",
    "beta-sweep": "beta_sweep",
    "gamma-sweep": "gamma_sweep",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _floats(values) -> tuple[float, ...]:
    out = []
    for v in values:
        for part in v.split(","):
            if part.strip():
                out.append(float(part))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="netdim", description="LVID/LVD node centrality and SIR evaluation")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in _COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--graph", required=True, help="edge-list file")
        s.add_argument("--methods", default=",".join(DEFAULT_METHODS),
                       help="comma-separated centrality methods (default: %(default)s)")
        s.add_argument("--k", type=int, default=10, help="seed-set size for topk")
        s.add_argument("--beta", nargs="+", default=None,
                       help="infection rate; for beta-sweep the grid (comma or space separated)")
        s.add_argument("--gamma", nargs="+", default=None,
                       help="recovery rate; for gamma-sweep the grid")
        s.add_argument("--steps", type=int, default=25)
        s.add_argument("--runs", type=int, default=100)
        s.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")
        s.add_argument("--out", default=None, help="output directory (default: runs/<command>)")
        s.add_argument("--format", choices=("csv", "json"), default="csv")
        s.add_argument("--keep-whole-graph", action="store_true",
                       help="do not reduce the graph to its largest connected component")
        s.add_argument("--negate-slope", type=_bool, default=True, metavar="BOOL",
                       help="score = negated regression slope (default true)")
        s.add_argument("--exclude-self", action="store_true",
                       help="leave the node's own degree out of its local volumes")
        s.add_argument("--topk-mode", choices=("simultaneous", "per-seed"), default="simultaneous")
        s.add_argument("--tau", choices=("a", "b"), default="a",
                       help="Kendall variant; 'a' has no tie correction (default)")
        s.add_argument("--comment-prefix", default="#", help="comment marker in the edge list")
        s.add_argument("--threads", type=int, default=1)
    return p


def _spec_from_args(args) -> ExperimentSpec:
    experiment = _COMMANDS[args.command]
    betas = _floats(args.beta) if args.beta else None
    gammas = _floats(args.gamma) if args.gamma else None
    beta_grid, gamma_grid = BETA_GRID, GAMMA_GRID
    beta, gamma = 0.05, 0.0
    if experiment == "beta_sweep":
        beta_grid = betas or BETA_GRID
    elif betas:
        if len(betas) != 1:
            raise ConfigError("--beta takes a single value outside beta-sweep")
        beta = betas[0]
    if experiment == "gamma_sweep":
        gamma_grid = gammas or GAMMA_GRID
    elif gammas:
        if len(gammas) != 1:
            raise ConfigError("--gamma takes a single value outside gamma-sweep")
        gamma = gammas[0]
    try:
        sir = SirParams(beta=beta, gamma=gamma, steps=args.steps, runs=args.runs, master_seed=args.seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return ExperimentSpec(
        dataset=args.graph,
        experiment=experiment,
        methods=tuple(m for m in args.methods.split(",") if m.strip()),
        k=args.k,
        beta_grid=beta_grid,
        gamma_grid=gamma_grid,
        sir=sir,
        output_dir=args.out or f"runs/{args.command}",
        output_format=args.format,
        keep_whole_graph=args.keep_whole_graph,
        negate_slope=args.negate_slope,
        include_self=not args.exclude_self,
        topk_mode=args.topk_mode,
        tau_variant=args.tau,
        comment_prefix=args.comment_prefix,
        threads=args.threads,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        spec = _spec_from_args(args)
        out = run_experiment(spec)
    except ConfigError as exc:
        print(f"netdim: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ParseError, EmptyGraphError) as exc:
        print(f"netdim: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConvergenceError, DegenerateFitError, ArithmeticError) as exc:
        print(f"netdim: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
