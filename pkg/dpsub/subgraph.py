# @author Augustin Mortier
# @desc dpsub - Subgraph class, branching metrics and distance verification

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from dpsub.graph import bfs_distances


class Subgraph:
    """
    Vertex/edge subset of a host graph.

    Edges of undirected hosts are stored as `(u, v)` with `u < v`; edges of directed hosts
    (dpsub.generators.manhattan.WeightedDigraph) keep their orientation.
    Endpoints of the given edges are added to the vertex set.
    """

    def __init__(self, host, vertices=(), edges=()):
        self.host = host
        self.directed = getattr(host, "directed", False)
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"Self-loop ({u}, {v}) is not a host edge.")
            if not host.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph.")
            normalized.add((u, v) if self.directed or u < v else (v, u))
        self.edge_set = frozenset(normalized)
        vertex_set = set(vertices)
        for u, v in self.edge_set:
            vertex_set.update((u, v))
        for v in vertex_set:
            if not 0 <= v < host.n:
                raise ValueError(f"Vertex {v} is not a vertex of the host graph.")
        self.vertex_set = frozenset(vertex_set)

    @classmethod
    def full(cls, host):
        """Returns the host graph itself as a subgraph."""
        return cls(host, range(host.n), host.edges())

    @classmethod
    def from_paths(cls, host, paths, vertices=()):
        """
        Returns the union of paths (any iterable of vertex sequences).

        Args:
            host (TerminalGraph): host graph.
            paths (list): vertex sequences.
            vertices (list, optional): extra vertices.
        """
        edges, extra = [], set(vertices)
        for path in paths:
            path = list(path)
            extra.update(path)
            edges.extend(zip(path[:-1], path[1:]))
        return cls(host, extra, edges)

    @cached_property
    def adjacency(self):
        """Neighbor sets in the subgraph (underlying undirected graph for directed hosts)."""
        adjacency = {v: set() for v in self.vertex_set}
        for u, v in self.edge_set:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return adjacency

    def degree(self, v):
        return len(self.adjacency.get(v, ()))

    def has_edge(self, u, v):
        if self.directed:
            return (u, v) in self.edge_set
        return (min(u, v), max(u, v)) in self.edge_set

    def is_terminal(self, v):
        return self.host.is_terminal(v)

    def edges(self):
        return sorted(self.edge_set)

    def vertices(self):
        return sorted(self.vertex_set)

    def with_edges(self, edges, vertices=()):
        return Subgraph(self.host, self.vertex_set | set(vertices), list(self.edge_set) + list(edges))

    def with_path(self, path):
        path = list(path)
        return self.with_edges(zip(path[:-1], path[1:]), vertices=path)

    def union(self, other):
        if other.host is not self.host and other.host != self.host:
            raise ValueError("Cannot merge subgraphs of different hosts.")
        return Subgraph(
            self.host, self.vertex_set | other.vertex_set, self.edge_set | other.edge_set
        )

    def __or__(self, other):
        return self.union(other)

    def distances_from(self, sources):
        """
        Returns breadth-first distances in the subgraph from the given sources (undirected hosts only).

        Args:
            sources (list): source vertices.

        Returns:
            (numpy.ndarray): array of shape (len(sources), host.n), `inf` where unreachable.
        """
        if self.directed:
            raise TypeError("Use dpsub.oracle.weighted for directed hosts.")
        return bfs_distances(self.host.n, sorted(self.edge_set), sources)

    def to_networkx(self):
        """
        Returns the subgraph as a networkx graph carrying the host node attributes.
        """
        host_graph = self.host.to_networkx()
        graph = host_graph.edge_subgraph(self.edge_set).copy()
        for v in self.vertex_set:
            if v not in graph:
                graph.add_node(v, **host_graph.nodes[v])
        return graph

    def __eq__(self, other):
        if not isinstance(other, Subgraph):
            return NotImplemented
        return (
            self.host == other.host
            and self.vertex_set == other.vertex_set
            and self.edge_set == other.edge_set
        )

    def __hash__(self):
        return hash((self.vertex_set, self.edge_set))

    def __repr__(self):
        return f"Subgraph(vertices={len(self.vertex_set)}, edges={len(self.edge_set)})"


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    d_host: float
    d_sub: float


@dataclass(frozen=True)
class VerificationReport:
    """
    Result of a distance verification: `ok` is True exactly when `violations` is empty.
    """

    slack: int = 0
    violations: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return len(self.violations) == 0

    def __bool__(self):
        return self.ok


def branching_vertices(H, terminals=True):
    """
    Returns the vertices of degree at least three in H.

    Args:
        H (Subgraph): subgraph.
        terminals (bool, optional): also count terminal vertices.

    Returns:
        (tuple): (count, sorted list of branching vertices).
    """
    found = [
        v
        for v in sorted(H.vertex_set)
        if H.degree(v) >= 3 and (terminals or not H.is_terminal(v))
    ]
    return len(found), found


def branching_edges(H):
    """
    Returns the number of edges of H with at least one endpoint that is a non-terminal of degree at least three.

    Args:
        H (Subgraph): subgraph.
    """
    _, hubs = branching_vertices(H, terminals=False)
    hubs = set(hubs)
    return sum(1 for u, v in H.edge_set if u in hubs or v in hubs)


def verify_approx(G, H, slack):
    """
    Checks `d_G(u, v) <= d_H(u, v) <= d_G(u, v) + slack` for every pair of terminals of G.

    Args:
        G (TerminalGraph): host graph.
        H (Subgraph): subgraph of G.
        slack (int): additive slack.

    Returns:
        (VerificationReport): report listing the violating pairs as (u, v, d_G, d_H).

    Example:
        ```python
        import dpsub
        G = dpsub.generators.hard.gen_hard(4)
        H = dpsub.construction.das.build_das(G).subgraph
        dpsub.subgraph.verify_approx(G, H, 1).ok
        # True
        ```
    """
    if slack < 0:
        raise ValueError(f"slack must be non-negative, got {slack}.")
    if H.host is not G and H.host != G:
        raise ValueError("H is not a subgraph of G.")
    terminals = list(G.terminals)
    if len(terminals) < 2:
        return VerificationReport(slack=slack)
    d_host, d_sub = _terminal_matrices(G, H, terminals)
    if H.directed:
        pairs = [(i, j) for i in range(len(terminals)) for j in range(len(terminals)) if i != j]
    else:
        pairs = [(i, j) for i in range(len(terminals)) for j in range(i + 1, len(terminals))]
    violations = []
    for i, j in pairs:
        dg, dh = d_host[i, j], d_sub[i, j]
        assert dh >= dg, f"subgraph distance {dh} below host distance {dg}"
        missing = terminals[i] not in H.vertex_set or terminals[j] not in H.vertex_set
        if missing or dh > dg + slack:
            violations.append(
                Violation(terminals[i], terminals[j], _as_number(dg), _as_number(dh))
            )
    return VerificationReport(slack=slack, violations=tuple(violations))


def _terminal_matrices(G, H, terminals):
    if H.directed:
        # weighted hosts: 0-weight edges need Dijkstra
        from dpsub.oracle.weighted import terminal_distances

        return terminal_distances(G), terminal_distances(H)
    d_host = G.terminal_distances
    present = [t for t in terminals if t in H.vertex_set]
    d_sub = np.full((len(terminals), len(terminals)), np.inf)
    if present:
        from_present = H.distances_from(present)
        rows = {t: i for i, t in enumerate(present)}
        for i, t in enumerate(terminals):
            if t in rows:
                d_sub[i, :] = from_present[rows[t], terminals]
    return d_host, d_sub


def verify_preserving(G, H):
    """
    Checks `d_H(u, v) = d_G(u, v)` for every pair of terminals of G.

    Args:
        G (TerminalGraph): host graph.
        H (Subgraph): subgraph of G.

    Returns:
        (VerificationReport): report with slack 0.
    """
    return verify_approx(G, H, 0)


def _as_number(value):
    return float("inf") if np.isinf(value) else int(value)
