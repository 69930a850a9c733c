# @author Augustin Mortier
# @desc dpsub - Shortest paths in weighted directed hosts

import math

import networkx as nx
import numpy as np

from dpsub.subgraph import Subgraph


def weighted_digraph(n, weighted_edges):
    """
    Returns a `networkx.DiGraph` on vertices `0..n-1` from (u, v, weight) triples.

    Args:
        n (int): number of vertices.
        weighted_edges (list): (u, v, weight) triples.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_weighted_edges_from(weighted_edges)
    return graph


def _as_networkx(D):
    if isinstance(D, Subgraph):
        host = D.host
        return weighted_digraph(host.n, [(u, v, host.weight(u, v)) for u, v in D.edge_set])
    return weighted_digraph(D.n, [(u, v, D.weight(u, v)) for u, v in D.edges()])


def weighted_distance(D, u, v):
    """
    Returns the directed shortest-path weight from u to v, honoring 0-weight edges.

    Args:
        D (WeightedDigraph | Subgraph): weighted digraph, or a subgraph of one.
        u (int): source vertex.
        v (int): target vertex.

    Returns:
        (int | float): distance, `inf` when v is not reachable or a vertex is missing from the subgraph.

    Example:
        ```python
        import dpsub
        D = dpsub.generators.manhattan.gen_manhattan(4)
        dpsub.oracle.weighted.weighted_distance(D, D.vertex(0, -1), D.vertex(0, 4))
        # 5
        ```
    """
    host = D.host if isinstance(D, Subgraph) else D
    for w in (u, v):
        if not 0 <= w < host.n:
            raise ValueError(f"Vertex {w} out of range [0, {host.n}).")
    if u == v:
        return 0
    if isinstance(D, Subgraph) and (u not in D.vertex_set or v not in D.vertex_set):
        return math.inf
    try:
        return int(nx.dijkstra_path_length(_as_networkx(D), u, v, weight="weight"))
    except nx.NetworkXNoPath:
        return math.inf


def weighted_distances_from(n, weighted_edges, sources):
    """
    Returns directed shortest-path weights from each source to every vertex.

    Args:
        n (int): number of vertices.
        weighted_edges (list): (u, v, weight) triples.
        sources (list): source vertices.

    Returns:
        (numpy.ndarray): array of shape (len(sources), n), `inf` where unreachable.
    """
    graph = weighted_digraph(n, weighted_edges)
    dist = np.full((len(sources), n), np.inf)
    for row, s in enumerate(sources):
        for v, d in nx.single_source_dijkstra_path_length(graph, s, weight="weight").items():
            dist[row, v] = d
    return dist


def terminal_distances(D):
    """
    Returns the matrix of directed distances between the terminals of a weighted digraph or of a subgraph of one,
    in the order of `host.terminals`.

    Args:
        D (WeightedDigraph | Subgraph): weighted digraph, or a subgraph of one.
    """
    host = D.host if isinstance(D, Subgraph) else D
    edges = D.edge_set if isinstance(D, Subgraph) else D.edges()
    terminals = list(host.terminals)
    dist = weighted_distances_from(host.n, [(u, v, host.weight(u, v)) for u, v in edges], terminals)
    return dist[:, terminals]
