import networkx as nx
import numpy as np
import pytest
from dpsub.graph import TerminalGraph, bfs_distances


@pytest.fixture
def path_graph():
    # 0 - 1 - 2 - 3, plus an isolated terminal 4
    return TerminalGraph.from_edges(5, [(0, 1), (1, 2), (2, 3)], [True, False, False, True, True])

def test_bfs_distances():
    dist = bfs_distances(4, [(0, 1), (1, 2)], [0, 3])
    # test values
    assert dist.shape == (2, 4)
    assert list(dist[0, :3]) == [0, 1, 2]
    assert np.isinf(dist[0, 3])

class TestTerminalGraph:
    def test_counts(self, path_graph):
        # test values
        assert path_graph.n == 5
        assert path_graph.terminals == (0, 3, 4)
        assert path_graph.k == 3
        assert path_graph.edge_count == 3
        assert path_graph.degree(1) == 2

    def test_edges(self, path_graph):
        # test values
        assert path_graph.edges() == [(0, 1), (1, 2), (2, 3)]
        assert path_graph.has_edge(2, 1)
        assert not path_graph.has_edge(0, 2)

    def test_distances(self, path_graph):
        # test values
        assert path_graph.bfs_distance(0, 3) == 3
        assert path_graph.bfs_distance(2, 2) == 0
        assert path_graph.bfs_distance(0, 4) == float("inf")
        assert path_graph.terminal_distances[0, 1] == 3
        with pytest.raises(ValueError):
            path_graph.bfs_distance(0, 7)

    def test_labels(self, path_graph):
        # test values
        assert path_graph.index_of("2") == 2
        with pytest.raises(ValueError):
            path_graph.index_of("x")

    def test_invalid(self):
        with pytest.raises(ValueError):
            TerminalGraph([[1], []], [False, False])
        with pytest.raises(ValueError):
            TerminalGraph([[0]], [False])
        with pytest.raises(ValueError):
            TerminalGraph([[1], [0]], [False])

    def test_to_networkx(self, path_graph):
        graph = path_graph.to_networkx()
        # test types
        assert type(graph) is nx.Graph
        # test values
        assert graph.nodes[3]["terminal"] is True
        assert graph.number_of_edges() == 3

    def test_equality(self, path_graph):
        other = TerminalGraph.from_edges(5, [(2, 3), (0, 1), (1, 2)], [True, False, False, True, True])
        # test values
        assert other == path_graph
        assert hash(other) == hash(path_graph)
