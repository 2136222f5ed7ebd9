"""
Command-line front end.

    netprune stats GRAPH [--format F] [--json] [--degree-distribution]
    netprune spectrum GRAPH --matrix {A,L,NL}
    netprune distance GRAPH1 GRAPH2 --metric M [--k K] [--unreachable X]
    netprune prune-experiment [CONFIG] [--mode ...] [--nrep N] [--torem-max F] ...

Data goes to standard output, diagnostics to standard error.
"""
import argparse
import json
import logging
import sys
import time
from typing import Any, Dict, List, Optional

from config.config import get_config
from src.exceptions import NetpruneError
from src.models.graph import Graph
from src.models.spectrum import MatrixKind
from src.schemas import MetricName, PruneMode
from src.services.distances import graph_distance
from src.services.experiment_config import load_experiment_config
from src.services.harness import replicate_pool, run_network
from src.services.loaders import GraphFormat, load_graph
from src.services.properties import degree_histogram, graph_properties
from src.services.records import write_records, write_records_json
from src.services.spectral import graph_spectrum
from src.utils.formatting import distance_value, fixed, spectrum_values

class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors are a single diagnostic line."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(2, f"error: {message}\n")


def _add_graph_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in GraphFormat],
        default=GraphFormat.EDGE_LIST.value,
        help="input format (default: edgelist)",
    )
    parser.add_argument("--delimiter", default=None, help="field separator (default: ,)")
    parser.add_argument(
        "--symmetrize",
        action="store_true",
        help="fold a directed 1-mode matrix into an undirected graph",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netprune", description="Distances between networks and their pruned versions")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    stats = sub.add_parser("stats", help="structural properties of a graph")
    stats.add_argument("graph")
    _add_graph_options(stats)
    stats.add_argument("--json", action="store_true", help="emit a JSON object")
    stats.add_argument(
        "--degree-distribution",
        action="store_true",
        help="print the normalised degree histogram as CSV instead",
    )

    spectrum = sub.add_parser("spectrum", help="sorted eigenvalues of a representation matrix")
    spectrum.add_argument("graph")
    _add_graph_options(spectrum)
    spectrum.add_argument(
        "--matrix",
        choices=[MatrixKind.ADJACENCY.value, MatrixKind.LAPLACIAN.value,
                 MatrixKind.NORMALIZED_LAPLACIAN.value],
        required=True,
    )

    distance = sub.add_parser("distance", help="distance between two graphs")
    distance.add_argument("graph1")
    distance.add_argument("graph2")
    _add_graph_options(distance)
    distance.add_argument("--metric", choices=[m.value for m in MetricName], required=True)
    distance.add_argument("--k", type=int, default=None, help="eigenvalues compared (spectral metrics)")
    distance.add_argument(
        "--unreachable", type=float, default=None, help="hop distance used for unreachable pairs (spd)"
    )

    experiment = sub.add_parser("prune-experiment", help="run a pruning experiment")
    experiment.add_argument("config", nargs="?", default=None)
    experiment.add_argument("--config", dest="config_flag", default=None)
    experiment.add_argument("--mode", choices=[m.value for m in PruneMode])
    experiment.add_argument("--nrep", type=int)
    experiment.add_argument("--torem-max", type=float)
    experiment.add_argument("--steps", type=int)
    experiment.add_argument("--seed", type=int)
    experiment.add_argument("--metrics", help="comma separated metric names")
    experiment.add_argument("--out")
    experiment.add_argument("--json-out")
    experiment.add_argument("--workers", type=int)
    experiment.add_argument("--networks", help="comma separated name|path[|format] entries")
    experiment.add_argument("--fractions", help="comma separated fraction grid")
    experiment.add_argument("--delimiter")
    return parser


def _load(path: str, args: argparse.Namespace) -> Graph:
    delimiter = args.delimiter if args.delimiter is not None else get_config().DEFAULT_DELIMITER
    return load_graph(path, GraphFormat(args.format), delimiter, symmetrize=args.symmetrize)


def _report_values(props: Dict[str, Any]) -> Dict[str, Any]:
    """Report values as printed: reals rounded to 3 decimals."""
    return {
        key: round(value, 3) if isinstance(value, float) else value
        for key, value in props.items()
    }


def _plain(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fixed(value, 3)
    return str(value)


def cmd_stats(args: argparse.Namespace) -> int:
    g = _load(args.graph, args)
    if args.degree_distribution:
        sys.stdout.write(degree_histogram(g).to_csv(index=False, lineterminator="\n"))
        return 0
    report = _report_values(graph_properties(g).as_dict())
    if args.json:
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key}={_plain(value)}")
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    spectrum = graph_spectrum(_load(args.graph, args), MatrixKind(args.matrix))
    for line in spectrum_values(spectrum.values, 12):
        print(line)
    return 0


def cmd_distance(args: argparse.Namespace) -> int:
    g1 = _load(args.graph1, args)
    g2 = _load(args.graph2, args)
    value = graph_distance(g1, g2, MetricName(args.metric), args.k, args.unreachable)
    print(distance_value(value))
    return 0


def cmd_prune_experiment(args: argparse.Namespace) -> int:
    overrides = {
        "MODE": args.mode,
        "NREP": args.nrep,
        "TOREM_MAX": args.torem_max,
        "STEPS": args.steps,
        "SEED": args.seed,
        "METRICS": args.metrics,
        "OUTPUT": args.out,
        "JSON_OUTPUT": args.json_out,
        "WORKERS": args.workers,
        "NETWORKS": args.networks,
        "FRACTIONS": args.fractions,
        "DELIMITER": args.delimiter,
    }
    cfg = load_experiment_config(args.config_flag or args.config, overrides)

    records = []
    with replicate_pool(cfg.workers) as pool:
        for index, source in enumerate(cfg.networks):
            started = time.perf_counter()
            network_records = run_network(cfg, index, source, pool)
            elapsed = time.perf_counter() - started
            print(f"{source.name}: {len(network_records)} records, {elapsed:.2f}s")
            records.extend(network_records)

    write_records(records, cfg.output_path)
    if cfg.json_output_path:
        write_records_json(records, cfg.json_output_path)
    return 0


COMMANDS = {
    "stats": cmd_stats,
    "spectrum": cmd_spectrum,
    "distance": cmd_distance,
    "prune-experiment": cmd_prune_experiment,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    config = get_config()
    logging.basicConfig(
        level="INFO" if args.verbose else config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except (NetpruneError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
