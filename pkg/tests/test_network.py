"""Network container invariants."""

from __future__ import annotations

import numpy as np
import pytest

from snmodel.network import INITIAL, Network, NodeOrigin


def star(n: int) -> Network:
    return Network.from_edges(n, [(0, i) for i in range(1, n)])


class TestConstruction:
    def test_edges_are_canonicalized(self):
        net = Network(["A", "B"], [1], [0])
        assert list(net.edge_pairs()) == [(0, 1)]
        assert net.has_edge(1, 0)

    def test_from_edges(self):
        net = Network.from_edges(3, [(2, 1), (0, 1)])
        assert net.n_nodes == 3
        assert net.n_edges == 2
        assert net.edge_set() == {(1, 2), (0, 1)}

    def test_degrees(self):
        net = star(5)
        assert net.degrees().tolist() == [4, 1, 1, 1, 1]

    def test_neighbors_sorted(self):
        net = Network.from_edges(4, [(3, 1), (1, 0), (1, 2)])
        assert net.neighbors(1).tolist() == [0, 2, 3]
        assert net.neighbors(0).tolist() == [1]

    def test_validate_catches_self_loop(self):
        net = Network(["A", "B"], np.array([1]), np.array([1]))
        with pytest.raises(AssertionError):
            net.validate()

    def test_validate_catches_parallel_edges(self):
        net = Network(["A", "B"], np.array([0, 1]), np.array([1, 0]))
        with pytest.raises(AssertionError):
            net.validate()

    def test_validate_catches_duplicate_structures(self):
        net = Network(["A", "A"], np.array([0]), np.array([1]))
        with pytest.raises(AssertionError):
            net.validate()


class TestSlicing:
    def test_induced_prefix(self):
        net = Network.from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 4)])
        prefix = net.induced_prefix(4)
        assert prefix.n_nodes == 4
        assert prefix.edge_set() == {(0, 1), (1, 2), (0, 3)}
        assert net.induced_prefix(0).n_nodes == 0
        with pytest.raises(ValueError):
            net.induced_prefix(6)

    def test_subgraph_compacts_ids(self):
        net = Network.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)], "ABCDE")
        sub = net.subgraph(np.array([False, True, True, True, False]))
        assert sub.n_nodes == 3
        assert sub.structures == ["B", "C", "D"]
        assert sub.edge_set() == {(0, 1), (1, 2)}

    def test_subgraph_remaps_provenance(self):
        prov = [
            NodeOrigin(None, INITIAL, 0),
            NodeOrigin(0, "mutate", 1),
            NodeOrigin(1, "insert", 2),
        ]
        net = Network(["A", "B", "C"], [0, 1], [1, 2], provenance=prov)
        sub = net.subgraph(np.array([False, True, True]))
        assert sub.provenance[0].parent is None  # old parent was dropped
        assert sub.provenance[1].parent == 0  # old node 1 is new node 0

    def test_subgraph_mask_length_checked(self):
        net = star(4)
        with pytest.raises(ValueError):
            net.subgraph(np.array([True, False]))
