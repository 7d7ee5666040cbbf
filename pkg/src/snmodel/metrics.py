"""Topology metrics: degrees, path lengths, clustering, motifs, heterogeneity.

Path-length and clustering computations are vectorized through scipy sparse
matrices; the test suite checks them against plain-Python reference
implementations on small graphs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Mapping

import numpy as np
from scipy.sparse import csgraph

from .network import Network

#: Rows of the all-pairs distance matrix computed per scipy call.
_BFS_CHUNK = 256


def average_degree(net: Network) -> float:
    """2 * edges / nodes."""
    if net.n_nodes == 0:
        raise ValueError("average degree is undefined for an empty network")
    return 2.0 * net.n_edges / net.n_nodes


def degree_histogram(net: Network) -> dict[int, int]:
    """Node count per degree value, zero degrees included."""
    counts = np.bincount(net.degrees()) if net.n_nodes else np.zeros(0, np.int64)
    return {k: int(c) for k, c in enumerate(counts) if c > 0}


def degree_distribution(net: Network) -> dict[int, float]:
    """Fraction of nodes per degree value."""
    if net.n_nodes == 0:
        raise ValueError("degree distribution is undefined for an empty network")
    n = net.n_nodes
    return {k: c / n for k, c in degree_histogram(net).items()}


def shortest_path_lengths_bfs(net: Network, source: int) -> dict[int, int]:
    """Plain BFS from one node; reference route for the vectorized sweep."""
    adjacency = [net.neighbors(i) for i in range(net.n_nodes)]
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def path_length_histogram(net: Network) -> dict[int, int]:
    """Number of connected unordered node pairs at each distance >= 1."""
    n = net.n_nodes
    if n < 2:
        return {}
    adj = net.to_csr()
    totals: dict[int, int] = {}
    for start in range(0, n, _BFS_CHUNK):
        rows = np.arange(start, min(start + _BFS_CHUNK, n))
        dist = csgraph.shortest_path(adj, method="D", unweighted=True, indices=rows)
        finite = dist[np.isfinite(dist) & (dist > 0)].astype(np.int64)
        if finite.size == 0:
            continue
        counts = np.bincount(finite)
        for length, count in enumerate(counts):
            if count:
                totals[length] = totals.get(length, 0) + int(count)
    # The sweep sees every unordered pair from both endpoints.
    return {length: count // 2 for length, count in sorted(totals.items())}


def path_length_distribution(net: Network) -> dict[int, float]:
    """Fraction of connected pairs per distance value."""
    hist = path_length_histogram(net)
    total = sum(hist.values())
    if total == 0:
        return {}
    return {length: count / total for length, count in hist.items()}


def average_path_length(net: Network) -> float:
    """Mean distance over connected unordered pairs."""
    hist = path_length_histogram(net)
    total = sum(hist.values())
    if total == 0:
        raise ValueError("average path length is undefined without connected pairs")
    return sum(length * count for length, count in hist.items()) / total


def connected_component_sizes(net: Network) -> list[int]:
    """Component sizes, largest first."""
    if net.n_nodes == 0:
        return []
    n_comp, labels = csgraph.connected_components(net.to_csr(), directed=False)
    sizes = np.bincount(labels, minlength=n_comp)
    return sorted((int(s) for s in sizes), reverse=True)


def largest_component_fraction(net: Network) -> float:
    sizes = connected_component_sizes(net)
    if not sizes:
        raise ValueError("component fraction is undefined for an empty network")
    return sizes[0] / net.n_nodes


def largest_component(net: Network) -> Network:
    if net.n_nodes == 0:
        raise ValueError("empty network has no components")
    _, labels = csgraph.connected_components(net.to_csr(), directed=False)
    keep_label = np.argmax(np.bincount(labels))
    return net.subgraph(labels == keep_label)


def _triangles_per_node(net: Network) -> np.ndarray:
    adj = net.to_csr().astype(np.int64)
    paths = adj @ adj
    doubled = paths.multiply(adj).sum(axis=1)
    return np.asarray(doubled).ravel() // 2


def local_clustering(net: Network) -> np.ndarray:
    """Per-node clustering coefficient; degree < 2 yields 0."""
    deg = net.degrees().astype(np.float64)
    coeff = np.zeros(net.n_nodes, dtype=np.float64)
    eligible = deg >= 2
    if np.any(eligible):
        tri = _triangles_per_node(net).astype(np.float64)
        d = deg[eligible]
        coeff[eligible] = 2.0 * tri[eligible] / (d * (d - 1.0))
    return coeff


def average_clustering(net: Network) -> float:
    """Mean of local clustering over all nodes, low-degree nodes included."""
    if net.n_nodes == 0:
        raise ValueError("average clustering is undefined for an empty network")
    return float(local_clustering(net).mean())


def clustering_by_degree(net: Network) -> dict[int, float]:
    """Mean local clustering among nodes of each degree."""
    deg = net.degrees()
    coeff = local_clustering(net)
    out: dict[int, float] = {}
    for k in np.unique(deg):
        out[int(k)] = float(coeff[deg == k].mean())
    return out


def triangle_count(net: Network) -> int:
    return int(_triangles_per_node(net).sum()) // 3


def motif_census_3(net: Network) -> dict[int, int]:
    """Counts of 3-node induced subgraphs keyed by their edge count.

    Closed form from the triangle count, the wedge count W = sum C(d, 2),
    and the edge count: every edge pairs with N-2 third nodes, counting
     1-edge triples once, 2-edge triples twice, 3-edge triples three times.
    """
    n = net.n_nodes
    if n < 3:
        raise ValueError("3-node census requires at least 3 nodes")
    degrees = [int(d) for d in net.degrees()]
    triangles = triangle_count(net)
    wedges = sum(d * (d - 1) // 2 for d in degrees)
    m = net.n_edges
    n3 = triangles
    n2 = wedges - 3 * triangles
    n1 = m * (n - 2) - 2 * n2 - 3 * n3
    n0 = n * (n - 1) * (n - 2) // 6 - n1 - n2 - n3
    return {0: n0, 1: n1, 2: n2, 3: n3}


def heterogeneity_index(net: Network) -> float:
    """Degree-heterogeneity in [0, 1]: 0 for regular graphs, 1 for stars.

    Sum over edges of (du^-1/2 - dv^-1/2)^2, normalized by N - 2*sqrt(N-1).
    """
    n = net.n_nodes
    if n <= 2:
        raise ValueError("heterogeneity index requires at least 3 nodes")
    if net.n_edges == 0:
        return 0.0
    deg = net.degrees().astype(np.float64)
    inv = np.zeros(n, dtype=np.float64)
    positive = deg > 0
    inv[positive] = 1.0 / np.sqrt(deg[positive])
    diffs = inv[net.edge_u] - inv[net.edge_v]
    return float((diffs * diffs).sum() / (n - 2.0 * math.sqrt(n - 1.0)))


def fit_power_law_slope(
    distribution: Mapping[int, float],
    k_min: int = 1,
) -> tuple[float, float]:
    """Least-squares slope of log10 P(k) against log10 k for k >= k_min.

    Zero-probability bins are skipped. Returns (slope, r_squared); a
    distribution P(k) ~ k**gamma comes back with slope ~ gamma.
    """
    points = [
        (k, p) for k, p in distribution.items() if k >= k_min and k > 0 and p > 0
    ]
    if len(points) < 2:
        raise ValueError("power-law fit requires at least 2 usable degree bins")
    x = np.log10([k for k, _ in points])
    y = np.log10([p for _, p in points])
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    ss_res = float((residuals**2).sum())
    ss_tot = float(((y - y.mean()) ** 2).sum())
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res < 1e-12 else 0.0
    else:
        r_squared = 1.0 - ss_res / ss_tot
    return float(slope), r_squared


@dataclass(frozen=True)
class MetricsReport:
    """Full topology summary of one network."""

    n_nodes: int
    n_edges: int
    average_degree: float
    average_path_length: float | None
    average_path_length_largest_component: float | None
    largest_component_fraction: float
    average_clustering: float
    heterogeneity: float | None
    degree_distribution: dict[int, float]
    path_length_distribution: dict[int, float]
    clustering_by_degree: dict[int, float]
    motif_census: dict[int, int] | None
    fitted_slope: tuple[float, float] | None = None
    fit_k_min: int | None = None


def compute_metrics(net: Network, fit_k_min: int | None = None) -> MetricsReport:
    """Evaluate every metric on one network.

    Metrics that are undefined for the given size (paths without connected
    pairs, heterogeneity below 3 nodes, the 3-node census below 3 nodes)
    come back as None rather than failing. ``fit_k_min`` additionally fits a
    power-law slope to the degree distribution.
    """
    if net.n_nodes == 0:
        raise ValueError("metrics are undefined for an empty network")
    hist = path_length_histogram(net)
    total_pairs = sum(hist.values())
    if total_pairs:
        apl = sum(l * c for l, c in hist.items()) / total_pairs
        pl_dist = {l: c / total_pairs for l, c in hist.items()}
    else:
        apl = None
        pl_dist = {}

    giant = largest_component(net)
    if giant.n_nodes >= 2:
        apl_giant = average_path_length(giant)
    else:
        apl_giant = None

    deg_dist = degree_distribution(net)
    fitted: tuple[float, float] | None = None
    if fit_k_min is not None:
        fitted = fit_power_law_slope(deg_dist, fit_k_min)

    return MetricsReport(
        n_nodes=net.n_nodes,
        n_edges=net.n_edges,
        average_degree=average_degree(net),
        average_path_length=apl,
        average_path_length_largest_component=apl_giant,
        largest_component_fraction=largest_component_fraction(net),
        average_clustering=average_clustering(net),
        heterogeneity=heterogeneity_index(net) if net.n_nodes > 2 else None,
        degree_distribution=deg_dist,
        path_length_distribution=pl_dist,
        clustering_by_degree=clustering_by_degree(net),
        motif_census=motif_census_3(net) if net.n_nodes >= 3 else None,
        fitted_slope=fitted,
        fit_k_min=fit_k_min,
    )
