# @author Augustin Mortier
# @desc dpsub - Point-terminal instance whose optimal subgraphs need k log k branching edges

from dpsub.instance import build_instance
from dpsub.oracle.hansel import BipartiteCoverFamily


def gen_gzero(k):
    """
    Builds the instance with non-terminals `I{x} = [x, x+k]` for -k ≤ x ≤ 0 and point terminals `t{x} = [x, x]`
    for -k ≤ x ≤ k.

    Args:
        k (int): at least 1.

    Returns:
        (Instance): k+1 non-terminals and 2k+1 terminals.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.zero.gen_gzero(5)
        G.n - G.k, G.k
        # (6, 11)
        ```
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}.")
    intervals, flags, labels = [], [], []
    for x in range(-k, 1):
        intervals.append((x, x + k))
        flags.append(False)
        labels.append(f"I{x}")
    for x in range(-k, k + 1):
        intervals.append((x, x))
        flags.append(True)
        labels.append(f"t{x}")
    return build_instance(intervals, flags, labels=labels, meta={"generator": "gzero", "k": k})


def gzero_terminal(G, x):
    """Vertex of the terminal at coordinate x."""
    return G.index_of(f"t{x}")


def hansel_family(H, k):
    """
    Extracts from a distance-preserving subgraph of `gen_gzero(k)` one bipartite graph per non-terminal.

    The graph B_I of a non-terminal I has the edges (i, j), 1 ≤ i < j ≤ k, such that H joins I to both
    `t{j-k-1}` and `t{i}`.

    Args:
        H (Subgraph): subgraph of `gen_gzero(k)`.
        k (int): instance parameter.

    Returns:
        (tuple): (BipartiteCoverFamily on {1..k}, dict non-terminal vertex -> number of non-isolated vertices of B_I).
    """
    G = H.host
    graphs, sizes = [], {}
    for x in range(-k, 1):
        I = G.index_of(f"I{x}")
        if I not in H.vertex_set:
            continue
        edges = [
            (i, j)
            for i in range(1, k + 1)
            for j in range(i + 1, k + 1)
            if H.has_edge(gzero_terminal(G, j - k - 1), I) and H.has_edge(gzero_terminal(G, i), I)
        ]
        graphs.append(tuple(edges))
        sizes[I] = len({v for edge in edges for v in edge})
    return BipartiteCoverFamily(k, tuple(graphs)), sizes
