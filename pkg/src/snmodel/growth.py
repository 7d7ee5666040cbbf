"""Growth of structured-node networks: incremental, batch variant, and pruning.

The growth loop derives a candidate structure from a randomly chosen template,
rejects duplicates and candidates that would be isolated, and otherwise adds
the node together with every edge allowed by the distance rule. Distances are
static, so the insertion-time scan against all existing nodes determines the
complete pairwise edge relation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .distance import DistanceConfig
from .network import INITIAL, Network, NodeOrigin
from .structures import (
    DEFAULT_MAX_LENGTH,
    Alphabet,
    EditProbabilities,
    apply_random_edit,
)

INCREMENTAL = "incremental"
BATCH = "batch"

#: max_attempts defaults to this multiple of target_nodes.
DEFAULT_ATTEMPT_FACTOR = 50


@dataclass(frozen=True)
class Instance:
    """Complete parameter set of one growth run."""

    alphabet: Alphabet
    initial_structures: tuple[str, ...]
    probs: EditProbabilities
    distance: DistanceConfig
    target_nodes: int
    max_attempts: int | None = None
    mode: str = INCREMENTAL
    prune_min_degree: int = 0
    seed: int = 0
    max_structure_length: int = DEFAULT_MAX_LENGTH

    def __post_init__(self) -> None:
        if not self.initial_structures:
            raise ValueError("Instance requires at least one initial structure")
        if len(set(self.initial_structures)) != len(self.initial_structures):
            raise ValueError("initial structures must be pairwise distinct")
        for word in self.initial_structures:
            self.alphabet.validate_word(word)
        if self.target_nodes < len(self.initial_structures):
            raise ValueError("target_nodes must be >= number of initial structures")
        if self.max_attempts is not None and self.max_attempts < self.target_nodes:
            raise ValueError("max_attempts must be >= target_nodes")
        if self.mode not in (INCREMENTAL, BATCH):
            raise ValueError(f"mode must be '{INCREMENTAL}' or '{BATCH}', got {self.mode!r}")
        if self.prune_min_degree < 0:
            raise ValueError("prune_min_degree must be >= 0")
        if self.probs.mutate > 0 and len(self.alphabet) < 2:
            raise ValueError("mutation requires an alphabet of size >= 2")
        if self.distance.match_table is not None:
            for sym in self.distance.match_table.alphabet.symbols:
                if sym not in self.alphabet:
                    raise ValueError("match table uses symbols outside the alphabet")

    @property
    def attempt_budget(self) -> int:
        if self.max_attempts is not None:
            return self.max_attempts
        return DEFAULT_ATTEMPT_FACTOR * self.target_nodes


@dataclass
class GrowthTrace:
    """Bookkeeping of one growth run."""

    attempts: int = 0
    accepted: int = 0
    rejected_duplicate: int = 0
    rejected_isolated: int = 0
    rejected_edit_failed: int = 0
    saturated: bool = False
    checkpoints: list[tuple[int, int, int]] = field(default_factory=list)


class GroupIndex:
    """Vectorized distance scans against all indexed structures.

    Each structure is encoded as the sequence of ids of its full symbol
    groups; group equality (multiset rule plus match table) is precomputed
    into a boolean matrix over the ids observed so far. Structures are stored
    column-wise, one sentinel-padded array per group position, so the
    distance from a candidate to every indexed structure is one cheap 1-d
    gather per position. The sentinel compares equal to everything, which
    implements "exceeding symbols are disregarded".
    """

    _PAD = 0

    def __init__(self, cfg: DistanceConfig, capacity: int = 64) -> None:
        self._unit = cfg.unit_distance
        self._table = cfg.match_table
        self._group_ids: dict[str, int] = {}
        self._groups: list[str] = [""]  # id 0 is the sentinel
        self._eq = np.zeros((8, 8), dtype=bool)
        self._eq[self._PAD, self._PAD] = True
        self._capacity = max(capacity, 16)
        self._cols: list[np.ndarray] = []
        self._acc = np.zeros(self._capacity, dtype=np.int32)
        self._buf = np.zeros(self._capacity, dtype=np.int8)
        self._n = 0

    def __len__(self) -> int:
        return self._n

    def _register_group(self, group: str) -> int:
        gid = len(self._groups)
        if gid >= self._eq.shape[0]:
            grown = np.zeros((2 * gid, 2 * gid), dtype=bool)
            grown[: self._eq.shape[0], : self._eq.shape[1]] = self._eq
            self._eq = grown
        key = "".join(sorted(group))
        self._eq[gid, gid] = True
        self._eq[gid, self._PAD] = True
        self._eq[self._PAD, gid] = True
        for other, oid in self._group_ids.items():
            equal = key == "".join(sorted(other)) or (
                self._table is not None and self._table.declares_equal(group, other)
            )
            self._eq[gid, oid] = equal
            self._eq[oid, gid] = equal
        self._group_ids[group] = gid
        self._groups.append(group)
        return gid

    def encode(self, word: str) -> np.ndarray:
        unit = self._unit
        n_groups = len(word) // unit
        ids = np.empty(n_groups, dtype=np.int32)
        for i in range(n_groups):
            group = word[i * unit : (i + 1) * unit]
            gid = self._group_ids.get(group)
            if gid is None:
                gid = self._register_group(group)
            ids[i] = gid
        return ids

    def _grow_capacity(self) -> None:
        self._capacity *= 2
        for j, col in enumerate(self._cols):
            grown = np.full(self._capacity, self._PAD, dtype=np.int32)
            grown[: self._n] = col[: self._n]
            self._cols[j] = grown
        self._acc = np.zeros(self._capacity, dtype=np.int32)
        self._buf = np.zeros(self._capacity, dtype=np.int8)

    def append(self, encoded: np.ndarray) -> None:
        if self._n >= self._capacity:
            self._grow_capacity()
        while len(self._cols) < encoded.shape[0]:
            self._cols.append(np.full(self._capacity, self._PAD, dtype=np.int32))
        for j, col in enumerate(self._cols):
            col[self._n] = encoded[j] if j < encoded.shape[0] else self._PAD
        self._n += 1

    def distances(self, encoded: np.ndarray) -> np.ndarray:
        """Distance from the encoded candidate to every indexed structure."""
        n = self._n
        if n == 0:
            return np.zeros(0, dtype=np.int32)
        width = max(len(self._cols), encoded.shape[0])
        eq_int = self._eq.view(np.int8)
        acc = self._acc[:n]
        buf = self._buf[:n]
        acc[:] = 0
        for j in range(width):
            gid = int(encoded[j]) if j < encoded.shape[0] else self._PAD
            if j < len(self._cols):
                np.take(eq_int[gid], self._cols[j][:n], out=buf)
                acc += buf
            else:
                # Candidate positions past every stored width always match.
                acc += 1
        return width - acc


def _network_from_adjacency(
    structures: list[str],
    neighbor_arrays: list[np.ndarray],
    provenance: list[NodeOrigin],
    flags: set[str],
) -> Network:
    if neighbor_arrays:
        counts = [a.shape[0] for a in neighbor_arrays]
        edge_u = np.concatenate(neighbor_arrays) if sum(counts) else np.zeros(0, np.int64)
        edge_v = np.repeat(np.arange(len(neighbor_arrays), dtype=np.int64), counts)
    else:
        edge_u = np.zeros(0, np.int64)
        edge_v = np.zeros(0, np.int64)
    return Network(structures, edge_u, edge_v, provenance=provenance, flags=flags)


def grow_incremental(
    instance: Instance,
    rng: random.Random | None = None,
    checkpoint_interval: int = 0,
) -> tuple[Network, GrowthTrace]:
    """Grow a network node by node until target_nodes or the attempt budget.

    Every accepted node is connected to all existing nodes within the
    distance threshold; candidates duplicating an existing structure or
    connecting to nothing are rejected. ``checkpoint_interval > 0`` records a
    (node count, edge count, attempt count) row whenever the node count
    crosses a multiple of the interval.
    """
    rng = random.Random(instance.seed) if rng is None else rng
    index = GroupIndex(instance.distance)
    trace = GrowthTrace()

    structures: list[str] = []
    seen: dict[str, int] = {}
    neighbor_arrays: list[np.ndarray] = []
    provenance: list[NodeOrigin] = []
    n_edges = 0

    for word in instance.initial_structures:
        encoded = index.encode(word)
        distances = index.distances(encoded)
        neighbors = np.flatnonzero(distances <= instance.distance.max_distance)
        neighbor_arrays.append(neighbors.astype(np.int64))
        n_edges += neighbors.shape[0]
        index.append(encoded)
        seen[word] = len(structures)
        structures.append(word)
        provenance.append(NodeOrigin(None, INITIAL, 0))

    def record_checkpoint() -> None:
        if checkpoint_interval > 0 and len(structures) % checkpoint_interval == 0:
            trace.checkpoints.append((len(structures), n_edges, trace.attempts))

    record_checkpoint()
    budget = instance.attempt_budget
    max_d = instance.distance.max_distance
    while len(structures) < instance.target_nodes and trace.attempts < budget:
        trace.attempts += 1
        template = rng.randrange(len(structures))
        word, kind = apply_random_edit(
            structures[template],
            instance.probs,
            instance.alphabet,
            rng,
            instance.max_structure_length,
        )
        if word is None:
            trace.rejected_edit_failed += 1
            continue
        if word in seen:
            trace.rejected_duplicate += 1
            continue
        encoded = index.encode(word)
        distances = index.distances(encoded)
        neighbors = np.flatnonzero(distances <= max_d)
        if neighbors.shape[0] == 0:
            trace.rejected_isolated += 1
            continue
        neighbor_arrays.append(neighbors.astype(np.int64))
        n_edges += neighbors.shape[0]
        index.append(encoded)
        seen[word] = len(structures)
        structures.append(word)
        provenance.append(NodeOrigin(template, kind.value, trace.attempts))
        trace.accepted += 1
        record_checkpoint()

    flags = {"growth-ordered"}
    if len(structures) < instance.target_nodes:
        trace.saturated = True
        flags.add("saturated")
    net = _network_from_adjacency(structures, neighbor_arrays, provenance, flags)
    return net, trace


def grow_batch(
    instance: Instance,
    rng: random.Random | None = None,
) -> tuple[Network, GrowthTrace]:
    """Batch variant: derive all structures from the initial ones, then wire.

    Candidate structures are generated by single random edits of uniformly
    chosen *initial* structures until target_nodes distinct structures exist
    or the attempt budget runs out. Edges are then computed in one pairwise
    pass and every node left isolated (initial nodes included) is removed.
    """
    rng = random.Random(instance.seed) if rng is None else rng
    trace = GrowthTrace()

    structures: list[str] = list(instance.initial_structures)
    seen: set[str] = set(structures)
    n_initial = len(structures)

    budget = instance.attempt_budget
    while len(structures) < instance.target_nodes and trace.attempts < budget:
        trace.attempts += 1
        template = rng.randrange(n_initial)
        word, kind = apply_random_edit(
            instance.initial_structures[template],
            instance.probs,
            instance.alphabet,
            rng,
            instance.max_structure_length,
        )
        if word is None:
            trace.rejected_edit_failed += 1
            continue
        if word in seen:
            trace.rejected_duplicate += 1
            continue
        seen.add(word)
        structures.append(word)
        trace.accepted += 1

    provenance = [NodeOrigin(None, INITIAL, 0) for _ in range(n_initial)]
    provenance += [
        NodeOrigin(None, "batch", 0) for _ in range(len(structures) - n_initial)
    ]

    index = GroupIndex(instance.distance)
    neighbor_arrays: list[np.ndarray] = []
    max_d = instance.distance.max_distance
    for word in structures:
        encoded = index.encode(word)
        distances = index.distances(encoded)
        neighbor_arrays.append(np.flatnonzero(distances <= max_d).astype(np.int64))
        index.append(encoded)

    net = _network_from_adjacency(structures, neighbor_arrays, provenance, set())
    keep = net.degrees() > 0
    dropped = int(np.count_nonzero(~keep))
    if dropped:
        trace.rejected_isolated += dropped
        net = net.subgraph(keep)

    if len(structures) < instance.target_nodes:
        trace.saturated = True
        net.flags.add("saturated")
    return net, trace


def grow(
    instance: Instance,
    rng: random.Random | None = None,
    checkpoint_interval: int = 0,
) -> tuple[Network, GrowthTrace]:
    """Dispatch on the instance mode."""
    if instance.mode == BATCH:
        return grow_batch(instance, rng)
    return grow_incremental(instance, rng, checkpoint_interval)


def prune_low_degree(net: Network, min_degree: int) -> Network:
    """Remove every node whose degree on *net* is below *min_degree*.

    Single pass: degrees are taken on the input network, so survivors may end
    up with degree below the threshold once their neighbors vanish. The
    edge-iff-within-distance biconditional no longer holds afterwards, which
    the returned network records in its flags.
    """
    if min_degree < 0:
        raise ValueError("min_degree must be >= 0")
    if min_degree == 0:
        return net.subgraph(np.ones(net.n_nodes, dtype=bool))
    pruned = net.subgraph(net.degrees() >= min_degree)
    pruned.flags.add("pruned")
    return pruned
