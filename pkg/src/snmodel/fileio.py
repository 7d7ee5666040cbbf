"""Text formats: edge lists, structure lists, plot data, JSON reports.

Every writer emits a version header comment and fully sorted content so that
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict
from pathlib import Path
from typing import Mapping

import numpy as np

from .metrics import MetricsReport
from .network import Network

EDGE_HEADER = "# snm edge-list v1"
STRUCTURE_HEADER = "# snm structures v1"
DISTRIBUTION_HEADER = "# snm distribution v1"
METRICS_FORMAT = "snm metrics v1"
SUMMARY_FORMAT = "snm summary v1"


def render_edge_list(net: Network) -> str:
    """Edge list text: one "u<TAB>v" line per edge, ids 0-based, sorted."""
    lines = [EDGE_HEADER, f"# nodes {net.n_nodes}"]
    order = np.lexsort((net.edge_v, net.edge_u))
    for u, v in zip(net.edge_u[order].tolist(), net.edge_v[order].tolist()):
        lines.append(f"{u}\t{v}")
    return "\n".join(lines) + "\n"


def write_edge_list(path: str | Path, net: Network) -> None:
    Path(path).write_text(render_edge_list(net), encoding="utf-8")


def parse_edge_list(text: str) -> Network:
    """Build a structureless network from edge-list text.

    Comment and blank lines are skipped; a "# nodes N" comment pins the node
    count (otherwise it is one past the highest id). Duplicate edges produce
    a warning and are kept once; self-loops and malformed lines are errors
    that name the offending line number.
    """
    n_nodes = 0
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "nodes":
                try:
                    n_nodes = max(n_nodes, int(fields[1]))
                except ValueError:
                    raise ValueError(f"line {lineno}: malformed node count") from None
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two ids, got {len(fields)} fields")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: ids must be integers") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: ids must be >= 0")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop on node {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {key}, keeping one")
            continue
        seen.add(key)
        pairs.append(key)
        n_nodes = max(n_nodes, u + 1, v + 1)
    return Network.from_edges(n_nodes, pairs)


def read_edge_list(path: str | Path) -> Network:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def render_structures(net: Network) -> str:
    """Structure list text: one "id<TAB>structure" line per structured node."""
    lines = [STRUCTURE_HEADER]
    for i, word in enumerate(net.structures):
        if word is not None:
            lines.append(f"{i}\t{word}")
    return "\n".join(lines) + "\n"


def write_structures(path: str | Path, net: Network) -> None:
    Path(path).write_text(render_structures(net), encoding="utf-8")


def parse_structures(text: str) -> dict[int, str]:
    out: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'id<TAB>structure'")
        try:
            node = int(fields[0])
        except ValueError:
            raise ValueError(f"line {lineno}: id must be an integer") from None
        if node in out:
            raise ValueError(f"line {lineno}: duplicate id {node}")
        out[node] = fields[1]
    return out


def read_structures(path: str | Path) -> dict[int, str]:
    return parse_structures(Path(path).read_text(encoding="utf-8"))


def render_distribution(
    values: Mapping[int, float] | Mapping[int, int],
    x_label: str,
    y_label: str,
) -> str:
    """Two-column plot data, keys sorted ascending."""
    lines = [DISTRIBUTION_HEADER, f"# {x_label}\t{y_label}"]
    for x in sorted(values):
        y = values[x]
        lines.append(f"{x}\t{y:.10g}" if isinstance(y, float) else f"{x}\t{y}")
    return "\n".join(lines) + "\n"


def write_distribution(
    path: str | Path,
    values: Mapping[int, float] | Mapping[int, int],
    x_label: str,
    y_label: str,
) -> None:
    Path(path).write_text(render_distribution(values, x_label, y_label), encoding="utf-8")


def _stringify_keys(value: object) -> object:
    if isinstance(value, dict):
        return {str(k): _stringify_keys(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify_keys(v) for v in value]
    return value


def metrics_to_dict(report: MetricsReport) -> dict:
    out = {"format": METRICS_FORMAT}
    out.update(_stringify_keys(asdict(report)))
    return out


def render_json(payload: Mapping) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_metrics(path: str | Path, report: MetricsReport) -> None:
    Path(path).write_text(render_json(metrics_to_dict(report)), encoding="utf-8")


def write_json(path: str | Path, payload: Mapping) -> None:
    Path(path).write_text(render_json(payload), encoding="utf-8")
