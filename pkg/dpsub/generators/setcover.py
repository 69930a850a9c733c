# @author Augustin Mortier
# @desc dpsub - Set cover instances and their reduction to distance-preserving subgraphs

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from dpsub.graph import TerminalGraph


@dataclass(frozen=True)
class SetCoverInstance:
    """
    Universe {1..n} and subsets S_1..S_m of it.

    Attributes:
        n (int): universe size.
        subsets (tuple): frozensets of elements.
    """

    n: int
    subsets: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"The universe needs at least one element, got n={self.n}.")
        subsets = tuple(frozenset(s) for s in self.subsets)
        for j, s in enumerate(subsets, start=1):
            if not s <= set(range(1, self.n + 1)):
                raise ValueError(f"S{j} = {sorted(s)} is not a subset of {{1..{self.n}}}.")
        object.__setattr__(self, "subsets", subsets)

    @property
    def m(self):
        return len(self.subsets)

    def covers(self, indices):
        """Returns True if the subsets at the given positions cover the universe."""
        covered = set().union(*(self.subsets[j] for j in indices)) if indices else set()
        return len(covered) == self.n

    def to_dict(self):
        return {"n": self.n, "subsets": [sorted(s) for s in self.subsets]}


def gen_gset(sc):
    """
    Builds the reduction graph of a set cover instance.

    Vertices are m+1 copies `u{u}.{i}` of every element, one vertex `S{j}` per subset, and `t0`, `t1`;
    `t0` is joined to every copy, a copy of u to every S_j containing u, and every S_j to `t1`.
    Copies, `t0` and `t1` are terminals.

    Args:
        sc (SetCoverInstance): set cover instance.

    Returns:
        (TerminalGraph): graph on n(m+1) + m + 2 vertices; `meta["setcover"]` stores the instance.

    Example:
        ```python
        import dpsub
        sc = dpsub.generators.setcover.SetCoverInstance(2, ({1, 2},))
        G = dpsub.generators.setcover.gen_gset(sc)
        G.n, G.k
        # (7, 6)
        ```
    """
    labels, flags = [], []
    copy = {}
    for u in range(1, sc.n + 1):
        for i in range(1, sc.m + 2):
            copy[(u, i)] = len(labels)
            labels.append(f"u{u}.{i}")
            flags.append(True)
    subset = {}
    for j in range(1, sc.m + 1):
        subset[j] = len(labels)
        labels.append(f"S{j}")
        flags.append(False)
    t0, t1 = len(labels), len(labels) + 1
    labels += ["t0", "t1"]
    flags += [True, True]

    edges = [(t0, v) for v in copy.values()]
    for (u, i), v in copy.items():
        edges.extend((v, subset[j]) for j, s in enumerate(sc.subsets, start=1) if u in s)
    edges.extend((subset[j], t1) for j in subset)
    meta = {"generator": "gset", "setcover": sc.to_dict()}
    return TerminalGraph.from_edges(len(labels), edges, flags, labels=labels, meta=meta)


def setcover_from_meta(meta):
    """Returns the SetCoverInstance stored by gen_gset in a graph's metadata."""
    stored = meta["setcover"]
    return SetCoverInstance(stored["n"], tuple(stored["subsets"]))


def all_setcover_instances(n_max, m_max):
    """
    Enumerates the set cover instances with 1 ≤ n ≤ n_max and 1 ≤ m ≤ m_max nonempty subsets,
    subsets drawn with repetition and in no particular order.

    Args:
        n_max (int): largest universe.
        m_max (int): largest number of subsets.

    Returns:
        (list): SetCoverInstance objects.
    """
    instances = []
    for n in range(1, n_max + 1):
        nonempty = [
            frozenset(c) for size in range(1, n + 1) for c in combinations(range(1, n + 1), size)
        ]
        for m in range(1, m_max + 1):
            for family in combinations_with_replacement(nonempty, m):
                instances.append(SetCoverInstance(n, family))
    return instances
