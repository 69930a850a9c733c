# @author Augustin Mortier
# @desc dpsub - Unit interval counterpart of the Manhattan digraph, and the slant transformation

import math
from fractions import Fraction

import networkx as nx

from dpsub.generators.bits import rev_int
from dpsub.generators.manhattan import gen_manhattan
from dpsub.instance import build_instance
from dpsub.subgraph import Subgraph
from dpsub.utils import is_power_of_two, log2_int


def gint_interval(k, i, j):
    """Interval of the cell (i, j): `[j + (k-1-i)/k, j + 1 + (k-1-i)/k]`."""
    start = j + Fraction(k - 1 - i, k)
    return start, start + 1


def gen_gint(k):
    """
    Builds the unit interval graph whose intervals start at every multiple of 1/k in [-1, k + 1 - 1/k].

    The interval starting at `j + (k-1-i)/k` is the cell (i, j) of a k x (k+2) grid, labelled `a(i,j)`;
    terminals sit on the same cells as in the Manhattan digraph.

    Args:
        k (int): power of two.

    Returns:
        (Instance): k(k+2) unit intervals, 3k of them terminals.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.gint.gen_gint(4)
        G.n, G.k
        # (24, 12)
        ```
    """
    if not is_power_of_two(k):
        raise ValueError(f"k must be a power of two, got {k}.")
    gamma = log2_int(k)
    middle = {(rev_int(gamma, i), i) for i in range(k)}
    intervals, flags, labels = [], [], []
    for j in range(-1, k + 1):
        for i in reversed(range(k)):
            intervals.append(gint_interval(k, i, j))
            flags.append(j in (-1, k) or (i, j) in middle)
            labels.append(f"a({i},{j})")
    return build_instance(intervals, flags, labels=labels, meta={"generator": "gint", "k": k})


def gint_vertex(G, i, j):
    """Vertex of the cell (i, j) in `gen_gint(k)`."""
    return G.index_of(f"a({i},{j})")


def gint_position(G, v):
    """Cell (i, j) of vertex v in `gen_gint(k)`."""
    k = G.meta["k"]
    start = G.intervals[v].left
    j = math.floor(start)
    return k - 1 - int((start - j) * k), j


def gint_edge_class(k, p, q):
    """
    Classifies the pair of cells p, q of `gen_gint(k)`, oriented from the earlier interval to the later one.

    Args:
        k (int): power of two.
        p (tuple): cell (i, j).
        q (tuple): cell (i', j').

    Returns:
        (str): `hor` for (i, j)-(i, j+1), `up` for (i, j)-(i', j) with i' < i,
            `slant` for (i, j)-(i', j+1) with i < i', or None when the intervals do not meet.
    """
    if gint_interval(k, *q)[0] < gint_interval(k, *p)[0]:
        p, q = q, p
    (i, j), (i2, j2) = p, q
    if (i, j) == (i2, j2):
        return None
    if j2 == j + 1 and i2 == i:
        return "hor"
    if j2 == j and i2 < i:
        return "up"
    if j2 == j + 1 and i < i2:
        return "slant"
    return None


def _oriented(H):
    # unit intervals: canonical order is the order of starts
    graph = nx.DiGraph()
    graph.add_nodes_from(H.vertex_set)
    graph.add_edges_from((min(u, v), max(u, v)) for u, v in H.edge_set)
    return graph


def gint_directed_distance(H, u, v):
    """
    Returns the distance from u to v in H with every edge oriented from the earlier interval to the later one.

    Args:
        H (Subgraph): subgraph of `gen_gint(k)`.
        u (int): source vertex.
        v (int): target vertex.

    Returns:
        (int | float): number of edges, `inf` when there is no directed path.
    """
    if u == v:
        return 0
    try:
        return nx.shortest_path_length(_oriented(H), u, v)
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        return math.inf


def slant_transform(H_int, D=None):
    """
    Maps a subgraph of `gen_gint(k)` holding every horizontal edge to a subgraph of `gen_manhattan(k)`.

    Horizontal and upward edges keep their cells; a slanting edge (i, j)-(i', j+1) becomes the 0-weight downward edge
    (i, j)-(i', j), so that (i, j) still reaches (i', j+1) at weight 1 through the horizontal edge of row i'.

    Args:
        H_int (Subgraph): subgraph of `gen_gint(k)`.
        D (WeightedDigraph, optional): target `gen_manhattan(k)`, built when omitted.

    Returns:
        (Subgraph): subgraph of the Manhattan digraph.

    Raises:
        ValueError: if a horizontal edge of `gen_gint(k)` is missing from H_int.
    """
    G = H_int.host
    k = G.meta["k"]
    if D is None:
        D = gen_manhattan(k)
    for i in range(k):
        for j in range(-1, k):
            if not H_int.has_edge(gint_vertex(G, i, j), gint_vertex(G, i, j + 1)):
                raise ValueError(f"Horizontal edge a({i},{j})-a({i},{j + 1}) is missing.")
    edges = []
    for u, v in H_int.edge_set:
        p, q = gint_position(G, u), gint_position(G, v)
        if gint_interval(k, *q)[0] < gint_interval(k, *p)[0]:
            p, q = q, p
        kind = gint_edge_class(k, p, q)
        if kind == "slant":
            q = (q[0], p[1])
        edges.append((D.vertex(*p), D.vertex(*q)))
    vertices = [D.vertex(*gint_position(G, v)) for v in H_int.vertex_set]
    return Subgraph(D, vertices, edges)
