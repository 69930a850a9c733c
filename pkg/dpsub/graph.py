# @author Augustin Mortier
# @desc dpsub - TerminalGraph class

from bisect import bisect_left
from functools import cached_property

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


def csr_from_edges(n, edges):
    """
    Returns the symmetric scipy adjacency matrix of an undirected edge list.

    Args:
        - n (int): number of vertices.
        - edges (list): (u, v) pairs.
    """
    if len(edges) == 0:
        return csr_matrix((n, n), dtype=np.int8)
    edges = np.asarray(edges, dtype=np.int64)
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(n, n))


def bfs_distances(n, edges, sources):
    """
    Returns unweighted distances from each source to every vertex.

    Args:
        - n (int): number of vertices.
        - edges (list): undirected (u, v) pairs.
        - sources (list): source vertices.

    Returns:
        (numpy.ndarray): array of shape (len(sources), n), `inf` where unreachable.
    """
    sources = list(sources)
    if n == 0 or len(sources) == 0:
        return np.zeros((len(sources), n))
    dist = shortest_path(
        csr_from_edges(n, edges), directed=False, unweighted=True, indices=sources
    )
    return np.atleast_2d(dist)


def _as_distance(value):
    # scipy returns floats; keep integers exact and inf as float
    return float("inf") if np.isinf(value) else int(value)


class TerminalGraph:
    """
    Base class representing an undirected simple graph on vertices `0..n-1` with a distinguished set of terminals.
    Interval instances (dpsub.instance.Instance) derive from it; the set-cover reduction graph is a plain TerminalGraph.
    """

    def __init__(self, neighbors, terminal_flags, labels=None, meta=None):
        neighbors = [tuple(sorted(set(nbrs))) for nbrs in neighbors]
        n = len(neighbors)
        if len(terminal_flags) != n:
            raise ValueError(
                f"terminal_flags has {len(terminal_flags)} entries for {n} vertices."
            )
        for u, nbrs in enumerate(neighbors):
            for v in nbrs:
                if v == u:
                    raise ValueError(f"Self-loop on vertex {u}.")
                if not 0 <= v < n:
                    raise ValueError(f"Neighbor {v} of vertex {u} is out of range.")
        self._neighbors = tuple(neighbors)
        for u, nbrs in enumerate(self._neighbors):
            for v in nbrs:
                if u not in self._neighbors[v]:
                    raise ValueError(f"Adjacency is not symmetric on ({u}, {v}).")
        self._terminal_flags = tuple(bool(flag) for flag in terminal_flags)
        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise ValueError(f"labels has {len(labels)} entries for {n} vertices.")
        self.labels = tuple(str(label) for label in labels)
        self.meta = dict(meta or {})

    @classmethod
    def from_edges(cls, n, edges, terminal_flags, labels=None, meta=None):
        """
        Builds a TerminalGraph from an edge list.

        Args:
            n (int): number of vertices.
            edges (list): (u, v) pairs.
            terminal_flags (list): one boolean per vertex.
            labels (list, optional): one label per vertex.
            meta (dict, optional): free metadata.

        Returns:
            (TerminalGraph): the graph.
        """
        neighbors = [[] for _ in range(n)]
        for u, v in edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return TerminalGraph(neighbors, terminal_flags, labels=labels, meta=meta)

    @property
    def n(self):
        """Number of vertices."""
        return len(self._neighbors)

    @property
    def terminal_flags(self):
        return self._terminal_flags

    @cached_property
    def terminals(self):
        """Terminal vertices, in increasing vertex order."""
        return tuple(v for v, flag in enumerate(self._terminal_flags) if flag)

    @property
    def k(self):
        """Number of terminals."""
        return len(self.terminals)

    def is_terminal(self, v):
        return self._terminal_flags[v]

    def neighbors(self, v):
        return self._neighbors[v]

    def degree(self, v):
        return len(self._neighbors[v])

    def has_edge(self, u, v):
        nbrs = self._neighbors[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    @cached_property
    def edge_list(self):
        """Edges as (u, v) pairs with u < v, sorted."""
        return tuple(
            (u, v) for u, nbrs in enumerate(self._neighbors) for v in nbrs if u < v
        )

    def edges(self):
        return list(self.edge_list)

    @property
    def edge_count(self):
        return len(self.edge_list)

    def index_of(self, label):
        """
        Returns the vertex carrying a given label.

        Args:
            label (str): vertex label.

        Returns:
            (int): vertex index.
        """
        try:
            return self._label_index[str(label)]
        except KeyError:
            raise ValueError(f"No vertex labelled {label!r}.") from None

    @cached_property
    def _label_index(self):
        return {label: v for v, label in enumerate(self.labels)}

    def distances_from(self, sources):
        """
        Returns breadth-first distances from the given sources.

        Args:
            sources (list): source vertices.

        Returns:
            (numpy.ndarray): array of shape (len(sources), n), `inf` where unreachable.
        """
        return bfs_distances(self.n, self.edge_list, sources)

    def bfs_distance(self, u, v):
        """
        Returns the unweighted distance between two vertices, `inf` when disconnected.

        Args:
            u (int): first vertex.
            v (int): second vertex.
        """
        for w in (u, v):
            if not 0 <= w < self.n:
                raise ValueError(f"Vertex {w} out of range [0, {self.n}).")
        if u == v:
            return 0
        return _as_distance(self.distances_from([u])[0, v])

    @cached_property
    def terminal_distances(self):
        """Distance matrix between terminals, in the order of `terminals`."""
        dist = self.distances_from(self.terminals)
        return dist[:, list(self.terminals)] if self.k else np.zeros((0, 0))

    def to_networkx(self):
        """
        Returns the graph as a `networkx.Graph` with `label` and `terminal` node attributes.
        """
        graph = nx.Graph()
        for v in range(self.n):
            graph.add_node(v, label=self.labels[v], terminal=self.is_terminal(v))
        graph.add_edges_from(self.edge_list)
        return graph

    def __eq__(self, other):
        if not isinstance(other, TerminalGraph) or type(self) is not type(other):
            return NotImplemented
        return (
            self._neighbors == other._neighbors
            and self._terminal_flags == other._terminal_flags
        )

    def __hash__(self):
        return hash((self._neighbors, self._terminal_flags))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.edge_count}, k={self.k})"
