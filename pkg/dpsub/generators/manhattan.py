# @author Augustin Mortier
# @desc dpsub - Manhattan grid digraph with 0/1 weights and bit-reversed middle terminals

from functools import cached_property

import networkx as nx

from dpsub.generators.bits import BitString, friends, lca_triple, rev_int
from dpsub.utils import is_power_of_two, log2_int

EDGE_KINDS = ("hor", "up", "down")
WEIGHTS = {"hor": 1, "up": 1, "down": 0}


class WeightedDigraph:
    """
    Directed grid graph on the cells (i, j), 0 ≤ i < rows and -1 ≤ j ≤ rows, whose edges carry a weight in {0, 1}
    and a kind among `hor`, `up` and `down`.

    Cell (i, j) is the vertex `i * (rows + 2) + j + 1`. Antiparallel edges may join the same two cells.
    """

    directed = True

    def __init__(self, rows, edges, terminal_flags, meta=None):
        """
        Args:
            rows (int): number of rows.
            edges (list): (u, v, weight, kind) tuples.
            terminal_flags (list): one boolean per vertex.
            meta (dict, optional): free metadata.
        """
        self.rows = rows
        n = rows * (rows + 2)
        if len(terminal_flags) != n:
            raise ValueError(f"terminal_flags has {len(terminal_flags)} entries for {n} vertices.")
        self._edges = {}
        for u, v, weight, kind in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"Invalid edge ({u}, {v}).")
            if kind not in EDGE_KINDS:
                raise ValueError(f"Unknown edge kind {kind!r}, expected one of {EDGE_KINDS}.")
            if weight not in (0, 1):
                raise ValueError(f"Edge weights are 0 or 1, got {weight}.")
            self._edges[(u, v)] = (weight, kind)
        self._terminal_flags = tuple(bool(flag) for flag in terminal_flags)
        self.meta = dict(meta or {})

    @property
    def n(self):
        return self.rows * (self.rows + 2)

    def vertex(self, i, j):
        """Vertex of cell (i, j)."""
        if not (0 <= i < self.rows and -1 <= j <= self.rows):
            raise ValueError(f"Cell ({i}, {j}) is outside the grid.")
        return i * (self.rows + 2) + j + 1

    def position(self, v):
        """Cell (i, j) of vertex v."""
        i, j = divmod(v, self.rows + 2)
        return i, j - 1

    @cached_property
    def labels(self):
        return tuple(f"({i},{j})" for i, j in map(self.position, range(self.n)))

    @property
    def terminal_flags(self):
        return self._terminal_flags

    @cached_property
    def terminals(self):
        return tuple(v for v, flag in enumerate(self._terminal_flags) if flag)

    @property
    def k(self):
        """Number of terminals."""
        return len(self.terminals)

    def is_terminal(self, v):
        return self._terminal_flags[v]

    def has_edge(self, u, v):
        return (u, v) in self._edges

    def weight(self, u, v):
        return self._edges[(u, v)][0]

    def edge_kind(self, u, v):
        return self._edges[(u, v)][1]

    def edges(self):
        return sorted(self._edges)

    @property
    def edge_count(self):
        return len(self._edges)

    def t_left(self, i):
        return self.vertex(i, -1)

    def t_right(self, i):
        return self.vertex(i, self.rows)

    def t_mid(self, i):
        """Middle terminal of column i, in row rev(i)."""
        return self.vertex(rev_int(log2_int(self.rows), i), i)

    def to_networkx(self):
        """
        Returns the graph as a `networkx.DiGraph` with `label`, `terminal` and `pos` node attributes
        and `weight` and `kind` edge attributes.
        """
        graph = nx.DiGraph()
        for v in range(self.n):
            graph.add_node(v, label=self.labels[v], terminal=self.is_terminal(v), pos=self.position(v))
        for (u, v), (weight, kind) in sorted(self._edges.items()):
            graph.add_edge(u, v, weight=weight, kind=kind)
        return graph

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return (
            self.rows == other.rows
            and self._edges == other._edges
            and self._terminal_flags == other._terminal_flags
        )

    def __hash__(self):
        return hash((self.rows, frozenset(self._edges.items()), self._terminal_flags))

    def __repr__(self):
        return f"WeightedDigraph(rows={self.rows}, edges={self.edge_count}, k={self.k})"


def gen_manhattan(k):
    """
    Builds the Manhattan digraph on a k x (k+2) grid.

    - `hor` edges (i, j) -> (i, j+1) of weight 1;
    - `up` edges (i1, j) -> (i2, j), i2 < i1, of weight 1;
    - `down` edges (i1, j) -> (i2, j), i1 < i2, of weight 0.

    Terminals are the first and the last cell of every row, and the cells (rev(i), i) for 0 ≤ i < k.

    Args:
        k (int): power of two.

    Returns:
        (WeightedDigraph): grid with 3k terminals.

    Example:
        ```python
        import dpsub
        D = dpsub.generators.manhattan.gen_manhattan(4)
        D.n, D.k
        # (24, 12)
        ```
    """
    if not is_power_of_two(k):
        raise ValueError(f"k must be a power of two, got {k}.")
    gamma = log2_int(k)

    def vertex(i, j):
        return i * (k + 2) + j + 1

    edges = []
    for i in range(k):
        for j in range(-1, k):
            edges.append((vertex(i, j), vertex(i, j + 1), WEIGHTS["hor"], "hor"))
    for j in range(-1, k + 1):
        for i1 in range(k):
            for i2 in range(k):
                if i2 < i1:
                    edges.append((vertex(i1, j), vertex(i2, j), WEIGHTS["up"], "up"))
                elif i1 < i2:
                    edges.append((vertex(i1, j), vertex(i2, j), WEIGHTS["down"], "down"))
    flags = [False] * (k * (k + 2))
    for i in range(k):
        flags[vertex(i, -1)] = True
        flags[vertex(i, k)] = True
        flags[vertex(rev_int(gamma, i), i)] = True
    return WeightedDigraph(k, edges, flags, meta={"generator": "manhattan", "k": k})


def _path_graph(H):
    host = H.host
    graph = nx.DiGraph()
    graph.add_nodes_from(H.vertex_set)
    graph.add_weighted_edges_from((u, v, host.weight(u, v)) for u, v in H.edge_set)
    return graph


def special_edges(H, k):
    """
    Returns the special edge of every friend pair of middle terminals in a subgraph of the Manhattan digraph.

    For a friend pair (i, j) with l the floor of lca(i, j), the special edge is the edge ((r, l), (r, l+1))
    by which a shortest path from t_i to t_j in H leaves column l for the last time.

    Args:
        H (Subgraph): subgraph of `gen_manhattan(k)` preserving the distances j - i between friends.
        k (int): power of two.

    Returns:
        (dict): friend pair (i, j) -> (r, l).

    Raises:
        ValueError: if H does not preserve the distance between some friends.
    """
    D = H.host
    gamma = log2_int(k)
    graph = _path_graph(H)
    found = {}
    for i, j in friends(k):
        source, target = D.t_mid(i), D.t_mid(j)
        try:
            path = nx.dijkstra_path(graph, source, target, weight="weight")
        except (nx.NetworkXNoPath, nx.NodeNotFound):
            raise ValueError(f"t_{i} and t_{j} are disconnected in H.") from None
        weight = sum(D.weight(u, v) for u, v in zip(path[:-1], path[1:]))
        if weight != j - i:
            raise ValueError(f"H stretches d(t_{i}, t_{j}) from {j - i} to {weight}.")
        _, floor, _ = lca_triple(BitString(i, gamma), BitString(j, gamma))
        column = floor.value
        for u, v in reversed(list(zip(path[:-1], path[1:]))):
            (r, a), (s, b) = D.position(u), D.position(v)
            if r == s and a == column and b == column + 1:
                found[(i, j)] = (r, column)
                break
    return found


def special_edge_violations(H, k):
    """
    Checks the special edges of H row by row.

    Two distinct friend pairs whose special edges share a row must use different columns, and between the columns
    a < b some cell (r, l) with a < l ≤ b must be a branching vertex or a terminal of H.

    Args:
        H (Subgraph): distance-preserving subgraph of `gen_manhattan(k)`.
        k (int): power of two.

    Returns:
        (list): offending `("column", p, q)` and `("separator", p, q)` tuples of friend pairs.
    """
    D = H.host
    spcl = special_edges(H, k)
    pairs = sorted(spcl)
    violations = []
    for a, p in enumerate(pairs):
        for q in pairs[a + 1 :]:
            (r, alpha), (s, beta) = spcl[p], spcl[q]
            if r != s:
                continue
            if alpha == beta:
                violations.append(("column", p, q))
                continue
            low, high = sorted((alpha, beta))
            separated = any(
                H.degree(D.vertex(r, col)) >= 3 or D.is_terminal(D.vertex(r, col))
                for col in range(low + 1, high + 1)
            )
            if not separated:
                violations.append(("separator", p, q))
    return violations


def row_branching_bound(H, k):
    """
    Compares, row by row, the number of distinct special edges with the number of branching vertices.

    Args:
        H (Subgraph): distance-preserving subgraph of `gen_manhattan(k)`.
        k (int): power of two.

    Returns:
        (list): one `{"row", "special", "branching", "ok"}` dict per row, `ok` meaning branching ≥ special - 2,
            branching vertices being counted in columns 0..k-1.
    """
    D = H.host
    spcl = special_edges(H, k)
    rows = []
    for r in range(k):
        special = len({column for row, column in spcl.values() if row == r})
        branching = sum(1 for col in range(k) if H.degree(D.vertex(r, col)) >= 3)
        rows.append({"row": r, "special": special, "branching": branching, "ok": branching >= special - 2})
    return rows
