"""Command-line front end.

Subcommands: generate (one network), metrics (report on an edge list),
experiment (multi-seed run with summary), compare-ba (growth curves against
the preferential-attachment baseline), prune (degree filter on an edge list).
Every instance-file key has a flag of the same name; flags override file
values.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import experiments, fileio
from .ba import BAParams
from .metrics import compute_metrics

_CONFIG_FLAGS = (
    ("alphabet", str),
    ("initial", str),
    ("p_mutate", float),
    ("p_insert", float),
    ("p_delete", float),
    ("p_duplicate", float),
    ("unit_distance", int),
    ("max_distance", int),
    ("match_file", str),
    ("target_nodes", int),
    ("max_attempts", int),
    ("mode", str),
    ("prune_min_degree", int),
    ("seed", int),
    ("n_seeds", int),
    ("checkpoint_interval", int),
)


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--instance", type=Path, help="instance file (key = value text)")
    for key, conv in _CONFIG_FLAGS:
        flag = "--" + key.replace("_", "-")
        parser.add_argument(flag, type=conv, default=None, help=f"override {key}")


def _config_from_args(args: argparse.Namespace) -> experiments.ExperimentConfig:
    mapping: dict[str, str] = {}
    base_dir: Path | None = None
    if args.instance is not None:
        mapping = experiments.parse_key_values(args.instance.read_text(encoding="utf-8"))
        base_dir = args.instance.parent
    for key, _ in _CONFIG_FLAGS:
        value = getattr(args, key)
        if value is not None:
            if key == "match_file":
                # CLI paths are relative to the working directory, not the file.
                value = str(Path(value).resolve())
            mapping[key] = str(value)
    return experiments.config_from_mapping(mapping, base_dir)


def _cmd_generate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    net = experiments.run_single(config.instance, config.checkpoint_interval)
    report = compute_metrics(net, fit_k_min=args.fit_k_min)
    fileio.write_edge_list(out / "edges.tsv", net)
    if any(s is not None for s in net.structures):
        fileio.write_structures(out / "structures.tsv", net)
    fileio.write_metrics(out / "metrics.json", report)
    fileio.write_distribution(
        out / "degree_distribution.tsv", report.degree_distribution, "degree", "fraction"
    )
    fileio.write_distribution(
        out / "path_length_distribution.tsv",
        report.path_length_distribution,
        "path_length",
        "fraction",
    )
    print(f"wrote network with {net.n_nodes} nodes, {net.n_edges} edges to {out}")
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    net = fileio.read_edge_list(args.edges)
    if args.structures is not None:
        for node, word in fileio.read_structures(args.structures).items():
            if node >= net.n_nodes:
                raise ValueError(f"structure id {node} outside the network")
            net.structures[node] = word
    report = compute_metrics(net, fit_k_min=args.fit_k_min)
    text = fileio.render_json(fileio.metrics_to_dict(report))
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote metrics to {args.out}")
    return 0


def _cmd_experiment(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    reference = None
    if args.reference is not None:
        payload = json.loads(Path(args.reference).read_text(encoding="utf-8"))
        reference = payload.get("means", payload)
    referenced = experiments.DEFAULT_REFERENCED_METRICS
    if args.referenced_metrics:
        referenced = tuple(m.strip() for m in args.referenced_metrics.split(",") if m.strip())
    summary = experiments.run_experiment(
        config,
        args.out,
        referenced_metrics=referenced,
        reference=reference,
        fit_k_min=args.fit_k_min,
    )
    print(
        f"{summary.n_seeds} seeds: "
        + ", ".join(
            f"{name}={value:.4g}"
            for name, value in summary.means.items()
            if value is not None
        )
    )
    print(f"within 10%: {summary.within_10:.0%}, within 20%: {summary.within_20:.0%}")
    return 0


def _cmd_compare_ba(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    target = config.instance.target_nodes
    if args.checkpoints:
        checkpoints = [int(c) for c in args.checkpoints.split(",")]
    else:
        interval = config.checkpoint_interval or target
        checkpoints = list(range(interval, target + 1, interval))
    ba = BAParams(
        target_nodes=target,
        initial_clique=args.ba_clique,
        edges_per_node=args.ba_edges,
        seed=config.instance.seed,
    )
    metric_names = ("average_degree", "average_path_length", "average_clustering")
    if args.metrics:
        metric_names = tuple(m.strip() for m in args.metrics.split(",") if m.strip())
    experiments.run_growth_comparison(
        config.instance,
        ba,
        checkpoints,
        n_seeds=config.n_seeds,
        output_directory=args.out,
        metric_names=metric_names,
    )
    print(f"wrote comparison curves for {len(checkpoints)} checkpoints to {args.out}")
    return 0


def _cmd_prune(args: argparse.Namespace) -> int:
    from .growth import prune_low_degree

    net = fileio.read_edge_list(args.edges)
    pruned = prune_low_degree(net, args.min_degree)
    fileio.write_edge_list(args.out, pruned)
    print(
        f"kept {pruned.n_nodes} of {net.n_nodes} nodes "
        f"({pruned.n_edges} edges) in {args.out}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snm",
        description="Structured-node network model: generation, metrics, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="grow one network and write its artifacts")
    _add_config_flags(p)
    p.add_argument("--out", required=True, type=Path, help="output directory")
    p.add_argument("--fit-k-min", type=int, default=None, help="fit a power law for k >= this")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("metrics", help="compute the metrics report of an edge list")
    p.add_argument("--edges", required=True, type=Path)
    p.add_argument("--structures", type=Path, default=None)
    p.add_argument("--out", type=Path, default=None, help="JSON output path (default stdout)")
    p.add_argument("--fit-k-min", type=int, default=None)
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("experiment", help="run a multi-seed experiment with a summary")
    _add_config_flags(p)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--fit-k-min", type=int, default=None)
    p.add_argument("--reference", type=Path, default=None, help="reference metrics JSON")
    p.add_argument(
        "--referenced-metrics",
        default=None,
        help="comma-separated metric names for the discrepancy fractions",
    )
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("compare-ba", help="metric growth curves against the BA baseline")
    _add_config_flags(p)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--checkpoints", default=None, help="comma-separated node counts")
    p.add_argument("--ba-clique", type=int, default=6)
    p.add_argument("--ba-edges", type=int, default=6)
    p.add_argument("--metrics", default=None, help="comma-separated curve metrics")
    p.set_defaults(func=_cmd_compare_ba)

    p = sub.add_parser("prune", help="drop nodes below a degree threshold from an edge list")
    p.add_argument("--edges", required=True, type=Path)
    p.add_argument("--min-degree", required=True, type=int)
    p.add_argument("--out", required=True, type=Path)
    p.set_defaults(func=_cmd_prune)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
