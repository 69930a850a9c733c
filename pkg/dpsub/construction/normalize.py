# @author Augustin Mortier
# @desc dpsub - Reduction of interval instances to unit/point instances, and lifting back

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from dpsub.instance import Instance, Interval, UnitPointInstance
from dpsub.subgraph import Subgraph


@dataclass(frozen=True)
class NormalizationMap:
    """
    Correspondence between an interval instance G and its normalized unit/point instance G'.

    Attributes:
        split (dict): original terminal -> (t_left, t_right) point terminals of G'.
        deleted (frozenset): original vertices whose non-terminal copy was deleted as dominated.
        origin (tuple): original vertex of every vertex of G'.
        source_intervals (tuple): interval of every vertex of G' before re-representation.
        coordinates (tuple): left coordinate of every vertex of G' after re-representation.
    """

    split: dict
    deleted: frozenset
    origin: tuple
    source_intervals: tuple
    coordinates: tuple


@dataclass(frozen=True)
class _Item:
    interval: Interval
    terminal: bool
    origin: int
    label: str


def _split_terminals(G):
    items = []
    for v in range(G.n):
        interval = G.intervals[v]
        items.append(_Item(interval, False, v, G.labels[v]))
        if G.is_terminal(v):
            items.append(_Item(Interval(interval.left, interval.left), True, v, f"{G.labels[v]}.left"))
            items.append(_Item(Interval(interval.right, interval.right), True, v, f"{G.labels[v]}.right"))
    return items


def _dominated(items):
    # left to right sweep; `reach` is the largest right endpoint among items starting no later
    order = sorted(
        range(len(items)),
        key=lambda i: (items[i].interval.left, -items[i].interval.right, not items[i].terminal, i),
    )
    deleted = set()
    reach = -math.inf
    for i in order:
        item = items[i]
        if not item.terminal and reach >= item.interval.right:
            deleted.add(i)
            continue
        reach = max(reach, item.interval.right)
    return deleted


def _unit_starts(intervals):
    """
    Left coordinates of a unit representation of a proper family sorted by left endpoint.
    Each start lies strictly between the constraints of its earlier neighbors, so no two endpoints coincide.
    """
    starts = []
    first = 0
    for j, interval in enumerate(intervals):
        while first < j and intervals[first].right < interval.left:
            first += 1
        if j == 0:
            starts.append(Fraction(0))
        elif first == j:
            starts.append(starts[-1] + 2)
        else:
            low = starts[-1] if first == 0 else max(starts[-1], starts[first - 1] + 1)
            starts.append((low + starts[first] + 1) / 2)
    return starts


def _point_positions(points, lefts, rights, starts):
    m = len(starts)
    groups = {}
    for c in points:
        lo, hi = bisect_left(rights, c), bisect_right(lefts, c) - 1
        groups.setdefault((lo, hi), set()).add(c)
    positions = {}
    for (lo, hi), coordinates in groups.items():
        if m == 0:
            positions.update({c: c for c in coordinates})
            continue
        if lo <= hi:
            low = max(starts[lo - 1] + 1, starts[hi]) if lo > 0 else starts[hi]
            high = min(starts[lo] + 1, starts[hi + 1]) if hi + 1 < m else starts[lo] + 1
        elif lo == 0:
            low, high = starts[0] - 2, starts[0]
        elif lo == m:
            low, high = starts[-1] + 1, starts[-1] + 3
        else:
            low, high = starts[lo - 1] + 1, starts[lo]
        ordered = sorted(coordinates)
        for rank, c in enumerate(ordered, start=1):
            positions[c] = low + (high - low) * Fraction(rank, len(ordered) + 1)
    return positions


def _edge_set(instance):
    return {
        (min(instance.order[u], instance.order[v]), max(instance.order[u], instance.order[v]))
        for u, v in instance.edge_list
    }


def normalize(G):
    """
    Reduces an interval instance to a unit/point instance with 2k terminals.

    1. every terminal t gets two point terminals at left(t) and right(t) and becomes a non-terminal;
    2. every non-terminal contained in another vertex is deleted (the first of identical copies is kept),
       so that the survivors are ordered the same way by left and by right endpoints;
    3. the survivors are re-placed as unit intervals by a left-to-right sweep keeping their adjacency;
    4. the point terminals are placed in the common part of their neighborhoods.

    Args:
        G (Instance): interval instance.

    Returns:
        (tuple): (UnitPointInstance, NormalizationMap).

    Example:
        ```python
        import dpsub
        G = dpsub.instance.build_instance([(0, 3), (1, 2), (2, 5), (4, 4.5)], [True, False, False, True])
        unit_point, mapping = dpsub.construction.normalize.normalize(G)
        unit_point.k, sorted(mapping.deleted)
        # (4, [0, 2])
        ```
    """
    items = _split_terminals(G)
    deleted = _dominated(items)
    kept = [i for i in range(len(items)) if i not in deleted]

    survivors = sorted(
        (i for i in kept if not items[i].terminal),
        key=lambda i: (items[i].interval.left, items[i].interval.right),
    )
    intervals = [items[i].interval for i in survivors]
    starts = _unit_starts(intervals)
    positions = _point_positions(
        [items[i].interval.left for i in kept if items[i].terminal],
        [interval.left for interval in intervals],
        [interval.right for interval in intervals],
        starts,
    )
    placed = {i: Interval(s, s + 1) for i, s in zip(survivors, starts)}
    for i in kept:
        if items[i].terminal:
            c = positions[items[i].interval.left]
            placed[i] = Interval(c, c)

    flags = [items[i].terminal for i in kept]
    labels = [items[i].label for i in kept]
    unit_point = UnitPointInstance(
        [placed[i] for i in kept], flags, labels=labels, meta=dict(G.meta, normalized=True)
    )
    original = Instance([items[i].interval for i in kept], flags)
    assert _edge_set(unit_point) == _edge_set(original), "unit re-representation changed adjacency"

    origin = [0] * unit_point.n
    source = [None] * unit_point.n
    split = {}
    for position, i in enumerate(kept):
        v = unit_point.index_map[position]
        origin[v] = items[i].origin
        source[v] = items[i].interval
        if items[i].terminal:
            pair = split.setdefault(items[i].origin, [None, None])
            # items list the left point before the right point
            pair[0 if pair[0] is None else 1] = v
    return unit_point, NormalizationMap(
        split={t: tuple(pair) for t, pair in split.items()},
        deleted=frozenset(items[i].origin for i in deleted),
        origin=tuple(origin),
        source_intervals=tuple(source),
        coordinates=tuple(interval.left for interval in unit_point.intervals),
    )


def lift(H_prime, mapping, G):
    """
    Turns a distance-preserving subgraph of the normalized instance into one of the original instance.

    Every vertex of H' is replaced by its original vertex (the two points of a terminal merge back into it),
    loops are dropped, and adjacent terminals get their direct edge.

    Args:
        H_prime (Subgraph): distance-preserving subgraph of the normalized instance.
        mapping (NormalizationMap): map returned by normalize.
        G (Instance): original instance.

    Returns:
        (Subgraph): distance-preserving subgraph of G.

    Raises:
        ValueError: if a point terminal of the normalized instance is missing from H'.
    """
    if G.k <= 1:
        return Subgraph(G, G.terminals)
    for t, pair in mapping.split.items():
        for v in pair:
            if v not in H_prime.vertex_set:
                raise ValueError(f"Split point {v} of terminal {t} is missing from the subgraph.")
    origin = mapping.origin
    vertices = {origin[v] for v in H_prime.vertex_set} | set(G.terminals)
    edges = {
        (min(origin[u], origin[v]), max(origin[u], origin[v]))
        for u, v in H_prime.edge_set
        if origin[u] != origin[v]
    }
    terminals = G.terminals
    for i, s in enumerate(terminals):
        for t in terminals[i + 1 :]:
            if G.has_edge(s, t):
                edges.add((s, t))
    return Subgraph(G, vertices, sorted(edges))
