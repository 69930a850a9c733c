# @author Augustin Mortier
# @desc dpsub - Interval instances, greedy and breadth-first shortest paths

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy.sparse.csgraph import shortest_path as _csgraph_shortest_path

from dpsub.graph import TerminalGraph, csr_from_edges
from dpsub.utils import as_fraction


@dataclass(frozen=True)
class Interval:
    """
    Closed real segment `[left, right]` with exact rational endpoints.
    """

    left: Fraction
    right: Fraction

    def __post_init__(self):
        left, right = as_fraction(self.left), as_fraction(self.right)
        if left > right:
            raise ValueError(f"Interval left endpoint {left} exceeds right endpoint {right}.")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def length(self):
        return self.right - self.left

    def is_point(self):
        return self.left == self.right

    def is_unit(self):
        return self.right - self.left == 1

    def intersects(self, other):
        return self.left <= other.right and other.left <= self.right

    def contains_point(self, x):
        return self.left <= x <= self.right

    def strictly_contains(self, other):
        return self.left < other.left and self.right > other.right

    def __str__(self):
        return f"[{self.left}, {self.right}]"


def as_interval(item):
    if isinstance(item, Interval):
        return item
    try:
        left, right = item
    except (TypeError, ValueError):
        raise TypeError(f"Cannot read an interval from {item!r}.") from None
    return Interval(left, right)


@dataclass(frozen=True)
class Path:
    """
    Sequence of distinct vertices, consecutive ones adjacent in the host graph.
    """

    vertices: tuple

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(vertices) == 0:
            raise ValueError("A path has at least one vertex.")
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"Repeated vertex in path {vertices}.")
        object.__setattr__(self, "vertices", vertices)

    @property
    def length(self):
        """Number of edges."""
        return len(self.vertices) - 1

    def edges(self):
        return list(zip(self.vertices[:-1], self.vertices[1:]))

    def is_valid_in(self, G):
        return all(G.has_edge(u, v) for u, v in self.edges())

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]


class DisconnectedTerminalsError(ValueError):
    """
    Raised when two terminals that must be joined lie in different components.
    """

    def __init__(self, u, v):
        self.pair = (u, v)
        super().__init__(f"Terminals {u} and {v} are disconnected.")


def check_terminals_connected(G):
    """
    Raises DisconnectedTerminalsError on the first pair of terminals of G in different components.

    Args:
        G (TerminalGraph): host graph.
    """
    terminals = G.terminals
    if len(terminals) < 2:
        return
    dist = G.distances_from([terminals[0]])[0]
    for t in terminals[1:]:
        if np.isinf(dist[t]):
            raise DisconnectedTerminalsError(terminals[0], t)


def _sweep_neighbors(intervals):
    # left-to-right sweep; the heap holds intervals still open at the current left endpoint
    neighbors = [[] for _ in intervals]
    by_left = sorted(range(len(intervals)), key=lambda v: (intervals[v].left, v))
    active = []
    for v in by_left:
        left = intervals[v].left
        while active and active[0][0] < left:
            heapq.heappop(active)
        for _, u in active:
            neighbors[u].append(v)
            neighbors[v].append(u)
        heapq.heappush(active, (intervals[v].right, v))
    return neighbors


class Instance(TerminalGraph):
    """
    Interval graph with a distinguished terminal subset.

    Vertices are re-indexed in canonical order: increasing right endpoint, ties broken by input index.
    This realizes the strict order `u ≺ v ⇔ u < v` on vertex indices while adjacency is computed on the original coordinates.
    The attribute `index_map` sends an input position to its canonical vertex, `order` does the reverse.
    """

    def __init__(self, intervals, terminal_flags, labels=None, meta=None):
        intervals = [as_interval(item) for item in intervals]
        if len(terminal_flags) != len(intervals):
            raise ValueError(
                f"terminal_flags has {len(terminal_flags)} entries for {len(intervals)} intervals."
            )
        order = sorted(range(len(intervals)), key=lambda i: (intervals[i].right, i))
        index_map = [0] * len(order)
        for v, i in enumerate(order):
            index_map[i] = v
        self.order = tuple(order)
        self.index_map = tuple(index_map)
        self.intervals = tuple(intervals[i] for i in order)
        if labels is None:
            labels = [f"v{i}" for i in range(len(intervals))]
        super().__init__(
            _sweep_neighbors(self.intervals),
            [terminal_flags[i] for i in order],
            labels=[labels[i] for i in order],
            meta=meta,
        )

    def has_edge(self, u, v):
        return u != v and self.intervals[u].intersects(self.intervals[v])

    @cached_property
    def farthest(self):
        """
        Farthest-right neighbor of every vertex (lowest canonical index among ties), `None` for isolated vertices.
        """
        farthest = []
        for v, nbrs in enumerate(self._neighbors):
            if not nbrs:
                farthest.append(None)
                continue
            best = nbrs[-1]
            reach = self.intervals[best].right
            for w in reversed(nbrs):
                if self.intervals[w].right != reach:
                    break
                best = w
            farthest.append(best)
        return tuple(farthest)

    @property
    def terminal_coordinates(self):
        """Left endpoints of the terminals (their positions when terminals are points)."""
        return tuple(self.intervals[t].left for t in self.terminals)

    def is_unit_point(self):
        """
        Returns True when every terminal is a point interval and every non-terminal a unit interval.
        """
        for v, interval in enumerate(self.intervals):
            if self.is_terminal(v) and not interval.is_point():
                return False
            if not self.is_terminal(v) and not interval.is_unit():
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.intervals == other.intervals
            and self.terminal_flags == other.terminal_flags
        )

    def __hash__(self):
        return hash((self.intervals, self.terminal_flags))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.edge_count}, k={self.k})"


class UnitPointInstance(Instance):
    """
    Instance whose terminals are point intervals and whose non-terminals are unit intervals.
    """

    def __init__(self, intervals, terminal_flags, labels=None, meta=None):
        super().__init__(intervals, terminal_flags, labels=labels, meta=meta)
        if not self.is_unit_point():
            raise ValueError(
                "Not a unit/point instance: terminals must be points and non-terminals unit intervals."
            )


def build_instance(intervals, terminal_flags, labels=None, meta=None):
    """
    Builds an interval instance.

    Args:
        intervals (list): Interval objects or (left, right) pairs; coordinates are converted to exact rationals.
        terminal_flags (list): one boolean per interval.
        labels (list, optional): one label per interval.
        meta (dict, optional): free metadata (name, seed, ...).

    Returns:
        (Instance): instance in canonical order. `instance.index_map[i]` is the vertex of input interval `i`.

    Example:
        ```python
        import dpsub
        G = dpsub.instance.build_instance([(0, 1), (0.5, 1.5), (2, 3)], [True, False, True])
        G.edges()
        # [(0, 1)]
        ```
    """
    if len(intervals) == 0:
        raise ValueError("An instance needs at least one interval.")
    if len(terminal_flags) != len(intervals):
        raise ValueError(
            f"terminal_flags has {len(terminal_flags)} entries for {len(intervals)} intervals."
        )
    return Instance(intervals, terminal_flags, labels=labels, meta=meta)


def as_unit_point(G):
    """
    Returns G as a UnitPointInstance, raising ValueError when its invariants do not hold.

    Args:
        G (Instance): interval instance.
    """
    if isinstance(G, UnitPointInstance):
        return G
    return UnitPointInstance(G.intervals, G.terminal_flags, labels=G.labels, meta=G.meta)


def bfs_distance(G, u, v):
    """
    Returns the exact unweighted distance between u and v in G, `inf` when disconnected.

    Args:
        G (TerminalGraph): host graph.
        u (int): first vertex.
        v (int): second vertex.
    """
    return G.bfs_distance(u, v)


def shortest_path(G, u, v):
    """
    Returns one breadth-first shortest path from u to v, or None when disconnected.

    Args:
        G (TerminalGraph): host graph.
        u (int): source.
        v (int): target.

    Returns:
        (Path): shortest path.
    """
    if u == v:
        return Path((u,))
    _, predecessors = _csgraph_shortest_path(
        csr_from_edges(G.n, G.edge_list),
        directed=False,
        unweighted=True,
        indices=[u],
        return_predecessors=True,
    )
    predecessors = np.atleast_2d(predecessors)[0]
    if predecessors[v] < 0:
        return None
    vertices = [v]
    while vertices[-1] != u:
        vertices.append(int(predecessors[vertices[-1]]))
    return Path(tuple(reversed(vertices)))


def greedy_path(G, u, v):
    """
    Returns the greedy shortest path from u to v.

    From the current interval the walk steps to the neighbor reaching farthest to the right,
    stops as soon as the current interval intersects v, then appends v.

    Args:
        G (Instance): interval instance.
        u (int): source vertex.
        v (int): target vertex, with u ≺ v.

    Returns:
        (Path): greedy path, or None when u and v are disconnected.

    Raises:
        ValueError: if v ≺ u.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.hard.gen_hard(3)
        t1, t3 = G.terminals[0], G.terminals[-1]
        dpsub.instance.greedy_path(G, t1, t3).length
        # 5
        ```
    """
    if v < u:
        raise ValueError(f"greedy_path needs u ≺ v, got u={u}, v={v}.")
    if u == v:
        return Path((u,))
    intervals = G.intervals
    target = intervals[v]
    vertices = [u]
    current = u
    while not intervals[current].intersects(target):
        step = G.farthest[current]
        if step is None or intervals[step].right <= intervals[current].right:
            return None
        vertices.append(step)
        current = step
    vertices.append(v)
    return Path(tuple(vertices))


def greedy_walk(G, u, steps=None, allowed=None):
    """
    Returns the greedy walk v(u,0) = u, v(u,1), ... until no neighbor reaches farther right.

    Args:
        G (Instance): interval instance.
        u (int): start vertex.
        steps (int, optional): maximum number of steps.
        allowed (callable, optional): `allowed(a, b)` restricts the steps to edges of a subgraph.

    Returns:
        (list): walk vertices.
    """
    intervals = G.intervals
    walk = [u]
    while steps is None or len(walk) <= steps:
        current = walk[-1]
        if allowed is None:
            step = G.farthest[current]
        else:
            candidates = [w for w in G.neighbors(current) if allowed(current, w)]
            step = None
            for w in candidates:
                if step is None or intervals[w].right > intervals[step].right:
                    step = w
        if step is None or intervals[step].right <= intervals[current].right:
            break
        walk.append(step)
    return walk


def window(G, a, b, right_open=False):
    """
    Returns the subgraph of G induced by the intervals meeting `[a, b]` (or `[a, b)` when right_open).

    Args:
        G (Instance): interval instance.
        a (float or Fraction): window left end, may be `-inf`.
        b (float or Fraction): window right end, may be `inf`.
        right_open (bool, optional): exclude b itself.

    Returns:
        (tuple): (Instance, index map from window vertices to vertices of G).
    """
    if a > b:
        raise ValueError(f"Window left end {a} exceeds right end {b}.")
    kept = [
        v
        for v, interval in enumerate(G.intervals)
        if interval.right >= a and (interval.left < b if right_open else interval.left <= b)
    ]
    sub = Instance(
        [G.intervals[v] for v in kept],
        [G.is_terminal(v) for v in kept],
        labels=[G.labels[v] for v in kept],
        meta=G.meta,
    )
    return sub, tuple(kept)
