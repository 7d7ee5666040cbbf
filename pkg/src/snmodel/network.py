"""Undirected simple graph with optional per-node structures and provenance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy import sparse

INITIAL = "initial"


@dataclass(frozen=True)
class NodeOrigin:
    """How a node entered the network: parent template, edit kind, attempt index."""

    parent: int | None
    edit: str
    iteration: int


class Network:
    """Simple undirected graph; node ids are 0..n-1.

    Edges are stored canonically as two parallel arrays with ``u < v``.
    ``structures[i]`` is the symbol word of node ``i`` (None for structureless
    graphs such as the preferential-attachment baseline or loaded edge lists).
    Instances are treated as immutable once built; metric helpers cache
    derived views (degrees, CSR adjacency) on first use.
    """

    def __init__(
        self,
        structures: Sequence[str | None],
        edge_u: np.ndarray | Sequence[int] = (),
        edge_v: np.ndarray | Sequence[int] = (),
        provenance: Sequence[NodeOrigin] | None = None,
        flags: Iterable[str] = (),
    ) -> None:
        self.structures: list[str | None] = list(structures)
        u = np.asarray(edge_u, dtype=np.int64)
        v = np.asarray(edge_v, dtype=np.int64)
        if u.shape != v.shape:
            raise ValueError("edge endpoint arrays must have the same length")
        self.edge_u = np.minimum(u, v)
        self.edge_v = np.maximum(u, v)
        self.provenance: list[NodeOrigin] | None = (
            list(provenance) if provenance is not None else None
        )
        self.flags: set[str] = set(flags)
        self._degrees: np.ndarray | None = None
        self._csr: sparse.csr_matrix | None = None

    @classmethod
    def from_edges(
        cls,
        n_nodes: int,
        edges: Iterable[tuple[int, int]],
        structures: Sequence[str | None] | None = None,
        flags: Iterable[str] = (),
    ) -> Network:
        pairs = list(edges)
        u = [p[0] for p in pairs]
        v = [p[1] for p in pairs]
        if structures is None:
            structures = [None] * n_nodes
        elif len(structures) != n_nodes:
            raise ValueError("structures length must equal n_nodes")
        return cls(structures, u, v, flags=flags)

    @property
    def n_nodes(self) -> int:
        return len(self.structures)

    @property
    def n_edges(self) -> int:
        return int(self.edge_u.shape[0])

    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            deg = np.bincount(self.edge_u, minlength=self.n_nodes)
            deg += np.bincount(self.edge_v, minlength=self.n_nodes)
            self._degrees = deg
        return self._degrees

    def to_csr(self) -> sparse.csr_matrix:
        if self._csr is None:
            n = self.n_nodes
            row = np.concatenate([self.edge_u, self.edge_v])
            col = np.concatenate([self.edge_v, self.edge_u])
            data = np.ones(row.shape[0], dtype=np.int8)
            self._csr = sparse.csr_matrix((data, (row, col)), shape=(n, n))
        return self._csr

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        for u, v in zip(self.edge_u.tolist(), self.edge_v.tolist()):
            yield u, v

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edge_pairs())

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return bool(np.any((self.edge_u == u) & (self.edge_v == v)))

    def neighbors(self, v: int) -> np.ndarray:
        return self.to_csr().indices[
            self.to_csr().indptr[v] : self.to_csr().indptr[v + 1]
        ]

    def induced_prefix(self, n: int) -> Network:
        """Subgraph on nodes 0..n-1.

        For networks built by node-at-a-time growth this equals the
        intermediate network at the moment node count reached ``n``, because
        growth never adds edges between two pre-existing nodes.
        """
        if not 0 <= n <= self.n_nodes:
            raise ValueError(f"prefix size {n} out of range")
        mask = self.edge_v < n
        prov = self.provenance[:n] if self.provenance is not None else None
        return Network(
            self.structures[:n],
            self.edge_u[mask],
            self.edge_v[mask],
            provenance=prov,
            flags=self.flags,
        )

    def subgraph(self, keep: np.ndarray) -> Network:
        """Induced subgraph on the boolean node mask *keep*; ids are compacted."""
        keep = np.asarray(keep, dtype=bool)
        if keep.shape[0] != self.n_nodes:
            raise ValueError("mask length must equal n_nodes")
        new_id = np.cumsum(keep) - 1
        edge_mask = keep[self.edge_u] & keep[self.edge_v]
        structures = [s for s, k in zip(self.structures, keep) if k]
        prov = None
        if self.provenance is not None:
            prov = []
            for origin, kept in zip(self.provenance, keep):
                if not kept:
                    continue
                parent = origin.parent
                if parent is not None:
                    parent = int(new_id[parent]) if keep[parent] else None
                prov.append(NodeOrigin(parent, origin.edit, origin.iteration))
        return Network(
            structures,
            new_id[self.edge_u[edge_mask]],
            new_id[self.edge_v[edge_mask]],
            provenance=prov,
            flags=self.flags,
        )

    def validate(self) -> None:
        """Check the simple-graph and distinct-structure invariants; test helper."""
        if self.n_edges:
            if int(self.edge_u.min()) < 0 or int(self.edge_v.max()) >= self.n_nodes:
                raise AssertionError("edge endpoint out of range")
            if np.any(self.edge_u == self.edge_v):
                raise AssertionError("self-loop present")
            pairs = set(zip(self.edge_u.tolist(), self.edge_v.tolist()))
            if len(pairs) != self.n_edges:
                raise AssertionError("parallel edge present")
        words = [s for s in self.structures if s is not None]
        if len(set(words)) != len(words):
            raise AssertionError("node structures are not pairwise distinct")
        if self.provenance is not None and len(self.provenance) != self.n_nodes:
            raise AssertionError("provenance length mismatch")
