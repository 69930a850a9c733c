# @author Augustin Mortier
# @desc dpsub - Covers of complete graphs by bipartite graphs

import math
from dataclasses import dataclass
from itertools import combinations

import networkx as nx


@dataclass(frozen=True)
class BipartiteCoverFamily:
    """
    Family of graphs on the vertex set {1..n}, given as edge tuples.

    Attributes:
        n (int): number of vertices.
        graphs (tuple): one tuple of (u, v) edges per graph.
    """

    n: int
    graphs: tuple

    def __post_init__(self):
        for edges in self.graphs:
            for u, v in edges:
                if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
                    raise ValueError(f"Invalid edge ({u}, {v}) on vertices 1..{self.n}.")

    def to_networkx(self):
        return [nx.Graph(list(edges)) for edges in self.graphs]


def hansel_verify(fam):
    """
    Checks a family of bipartite graphs against the complete graph K_n.

    When the union of the edge sets is the edge set of K_n, the numbers of non-isolated vertices of the graphs
    add up to at least n log2(n).

    Args:
        fam (BipartiteCoverFamily): family to check.

    Returns:
        (tuple): (covers_Kn, sum of non-isolated vertex counts, n log2(n)).

    Raises:
        ValueError: if a graph of the family is not bipartite.

    Example:
        ```python
        from dpsub.oracle.hansel import BipartiteCoverFamily, hansel_verify
        fam = BipartiteCoverFamily(4, (((1, 3), (1, 4), (2, 3), (2, 4)), ((1, 2), (1, 4), (3, 2), (3, 4))))
        hansel_verify(fam)
        # (True, 8, 8.0)
        ```
    """
    covered = set()
    total = 0
    for index, graph in enumerate(fam.to_networkx()):
        if not nx.is_bipartite(graph):
            raise ValueError(f"Graph {index} of the family is not bipartite.")
        total += sum(1 for v in graph if graph.degree(v) > 0)
        covered.update(frozenset(edge) for edge in graph.edges())
    covers = all(frozenset(pair) in covered for pair in combinations(range(1, fam.n + 1), 2))
    bound = fam.n * math.log2(fam.n) if fam.n > 1 else 0.0
    if covers:
        assert total >= bound, f"bipartite cover of K_{fam.n} with {total} < {bound} vertices"
    return covers, total, bound
