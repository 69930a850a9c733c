# @author Augustin Mortier
# @desc dpsub - Distance-preserving subgraph with O(k log k) branching vertices

import math
import warnings
from dataclasses import dataclass, field

from dpsub.construction.normalize import lift, normalize
from dpsub.instance import (
    DisconnectedTerminalsError,
    as_unit_point,
    check_terminals_connected,
    greedy_path,
)
from dpsub.subgraph import Subgraph, verify_preserving


@dataclass(frozen=True)
class LevelRecord:
    """
    Accounting of one merge step of the divide-and-conquer.

    Attributes:
        a (Fraction): left end of the window (first terminal coordinate).
        b (Fraction): right end of the window (last terminal coordinate).
        x (Fraction): cut; the left window is `[a, x)` and the right window `[x, b]`.
        terminals (int): terminals in the window.
        left (int): terminals in the left window.
        right (int): terminals in the right window.
        v_a (int): non-terminals of the left greedy paths meeting `[x, x+1]`.
        v_b (int): distinct non-terminals carrying a link to a terminal of `[x+1, b]`.
        added (int): distinct non-terminals brought by both steps.
    """

    a: object
    b: object
    x: object
    terminals: int
    left: int
    right: int
    v_a: int
    v_b: int
    added: int


@dataclass
class DpsStats:
    h0_vertices: int = 0
    augmentation_vertices: int = 0
    recursion_vertices: int = 0
    levels: list = field(default_factory=list)
    join_violations: list = field(default_factory=list)
    repaired_pairs: list = field(default_factory=list)


@dataclass(frozen=True)
class DpsResult:
    """
    Output of build_dps.

    Attributes:
        subgraph (Subgraph): distance-preserving subgraph of the input instance.
        unit_point (Subgraph): distance-preserving subgraph of the normalized instance.
        normalization (NormalizationMap): map between the input and the normalized instance.
        stats (DpsStats): construction counters.
    """

    subgraph: Subgraph
    unit_point: Subgraph
    normalization: object
    stats: DpsStats


def _greedy_or_raise(G, u, v):
    path = greedy_path(G, u, v)
    if path is None:
        raise DisconnectedTerminalsError(u, v)
    return path


def _paths_to_last(G):
    last = G.terminals[-1]
    return {t: _greedy_or_raise(G, t, last) for t in G.terminals[:-1]}


def _non_terminals(G, vertices):
    return {v for v in vertices if not G.is_terminal(v)}


def build_h0(G):
    """
    Returns the union of the greedy paths from every terminal to the last terminal,
    a shortest-path tree rooted at the last terminal.

    Args:
        G (Instance): unit/point instance with pairwise connected terminals.

    Returns:
        (Subgraph): union of greedy paths; the terminals alone when k ≤ 1.

    Raises:
        DisconnectedTerminalsError: if a terminal cannot reach the last one.
    """
    if G.k <= 1:
        return Subgraph(G, G.terminals)
    check_terminals_connected(G)
    return Subgraph.from_paths(G, _paths_to_last(G).values(), vertices=G.terminals)


def augment_near_pairs(G, H, radius=4):
    """
    Adds the greedy path of every terminal pair at distance at most `radius`.

    Args:
        G (Instance): interval instance.
        H (Subgraph): subgraph of G, usually the greedy tree.
        radius (int, optional): distance threshold.

    Returns:
        (Subgraph): augmented subgraph.
    """
    terminals = G.terminals
    dist = G.terminal_distances
    paths = []
    for i in range(len(terminals)):
        for j in range(i + 1, len(terminals)):
            if dist[i, j] <= radius:
                paths.append(greedy_path(G, terminals[i], terminals[j]))
    if not paths:
        return H
    return H | Subgraph.from_paths(G, paths)


def _coordinates(G, a, b, right_open=False):
    coordinates = {}
    for t in G.terminals:
        c = G.intervals[t].left
        if a <= c and (c < b if right_open else c <= b):
            coordinates[t] = c
    return coordinates


def choose_cut(G, a, b, right_open=False):
    """
    Picks the largest cut x of the window `[a, b]` such that `b - x ≥ 1` and `[x, b]` holds
    at least half (rounded up) of the window terminals.

    The constraints only change value at `b - 1` and at terminal coordinates, so x is `min(b - 1, c)`
    where c is the coordinate of the ⌈T/2⌉-th terminal from the right.

    Args:
        G (Instance): unit/point instance.
        a (Fraction): window left end.
        b (Fraction): window right end, with `b - a > 1`.
        right_open (bool, optional): the window is `[a, b)`.

    Returns:
        (Fraction): cut.

    Example:
        ```python
        from dpsub.instance import build_instance
        from dpsub.construction.dps import choose_cut
        G = build_instance([(0, 0), (5, 5), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)], [True] * 2 + [False] * 5)
        choose_cut(G, 0, 5)
        # 4
        ```
    """
    if not b - a > 1:
        raise ValueError(f"choose_cut needs b - a > 1, got a={a}, b={b}.")
    coordinates = sorted(_coordinates(G, a, b, right_open).values(), reverse=True)
    if not coordinates:
        raise ValueError(f"No terminal in window [{a}, {b}].")
    half = math.ceil(len(coordinates) / 2)
    return min(b - 1, coordinates[half - 1])


def _split_window(G, coordinates, a, b):
    x = choose_cut(G, a, b)
    if all(c >= x for c in coordinates.values()):
        # tied coordinates: cut just above the first terminal
        above = min(c for c in coordinates.values() if c > a)
        x = min(above, b - 1)
    return x


def _level(G, paths, coordinates, a, b, x):
    left = [t for t, c in coordinates.items() if c < x]
    right = [t for t, c in coordinates.items() if c >= x]
    on_paths = set()
    for t in left:
        on_paths.update(paths[t])
    intervals = G.intervals
    v_a = sorted(
        v for v in _non_terminals(G, on_paths) if intervals[v].left <= x + 1 and intervals[v].right >= x
    )
    near = [t for t, c in coordinates.items() if x <= c <= x + 1]
    closure = v_a + near
    edges = [
        (u, v) for i, u in enumerate(closure) for v in closure[i + 1 :] if G.has_edge(u, v)
    ]
    candidates = sorted(_non_terminals(G, on_paths))
    v_b = set()
    for t, c in coordinates.items():
        if c < x + 1:
            continue
        holder = next((v for v in candidates if intervals[v].contains_point(c)), None)
        if holder is None:
            continue
        edges.append((holder, t))
        v_b.add(holder)
    record = LevelRecord(
        a=a,
        b=b,
        x=x,
        terminals=len(coordinates),
        left=len(left),
        right=len(right),
        v_a=len(v_a),
        v_b=len(v_b),
        added=len(set(v_a) | v_b),
    )
    assert record.added <= 4 * record.left + record.right, f"level accounting exceeded: {record}"
    return left, right, set(closure) | v_b, edges, record


def build_dps_recursive(G, H0, a, b, right_open=False, stats=None, check=False, base=None, paths=None):
    """
    Divide-and-conquer step: returns H* such that H0 ∪ H* preserves the distances between the terminals of the window.

    The window is cut at x (see choose_cut); both halves are solved recursively, then
    the non-terminals of the left greedy paths meeting `[x, x+1]` are added with the terminals of `[x, x+1]` (induced),
    and every terminal of `[x+1, b]` is linked to the earliest interval of those paths containing it.

    Args:
        G (Instance): unit/point instance.
        H0 (Subgraph): greedy tree of G (see build_h0).
        a (Fraction): window left end, may be `-inf`.
        b (Fraction): window right end, may be `inf`.
        right_open (bool, optional): the window is `[a, b)`.
        stats (DpsStats, optional): collects one LevelRecord per merge.
        check (bool, optional): verify cross-window terminal pairs after each merge.
        base (Subgraph, optional): subgraph the merged levels are checked against (H0 plus near-pair paths).
        paths (dict, optional): greedy paths to the last terminal, by source terminal.

    Returns:
        (Subgraph): H*, empty for windows with one terminal or of width at most 1.
    """
    if paths is None:
        paths = _paths_to_last(G) if G.k > 1 else {}
    if stats is None:
        stats = DpsStats()
    vertices, edges = _recurse(G, paths, a, b, right_open, stats, check, base or H0)
    return Subgraph(G, vertices, edges)


def _recurse(G, paths, a, b, right_open, stats, check, base):
    coordinates = _coordinates(G, a, b, right_open)
    if len(coordinates) <= 1:
        return set(), []
    a, b = min(coordinates.values()), max(coordinates.values())
    if b - a <= 1:
        return set(), []
    x = _split_window(G, coordinates, a, b)
    left_vertices, left_edges = _recurse(G, paths, a, x, True, stats, check, base)
    right_vertices, right_edges = _recurse(G, paths, x, b, False, stats, check, base)
    left, right, vertices, edges, record = _level(G, paths, coordinates, a, b, x)
    stats.levels.append(record)
    vertices |= left_vertices | right_vertices
    edges += left_edges + right_edges
    if check:
        _check_join(G, base.with_edges(edges, vertices=vertices), left, right, stats)
    return vertices, edges


def _check_join(G, H, left, right, stats):
    d_host = G.distances_from(left)
    d_sub = H.distances_from(left)
    found = [
        (s, t, int(d_host[i, t]), float(d_sub[i, t]))
        for i, s in enumerate(left)
        for t in right
        if d_sub[i, t] != d_host[i, t]
    ]
    if found:
        stats.join_violations.extend(found)
        warnings.warn(f"{len(found)} cross-window terminal pairs not preserved after a merge.")


def _repair(G, H, stats):
    report = verify_preserving(G, H)
    if report.ok:
        return H
    paths = []
    for violation in report.violations:
        u, v = sorted((violation.u, violation.v))
        paths.append(_greedy_or_raise(G, u, v))
        stats.repaired_pairs.append((u, v))
    warnings.warn(f"{len(paths)} terminal pairs were repaired with their greedy paths.")
    return H | Subgraph.from_paths(G, paths)


def build_dps_unit_point(G, check=False, stats=None):
    """
    Builds a distance-preserving subgraph of a unit/point instance:
    the greedy tree, the greedy paths of near terminal pairs, and the divide-and-conquer links.

    Args:
        G (Instance): unit/point instance with pairwise connected terminals.
        check (bool, optional): debug mode, verify cross-window pairs after every merge.
        stats (DpsStats, optional): filled with the construction counters.

    Returns:
        (Subgraph): distance-preserving subgraph of G.

    Raises:
        DisconnectedTerminalsError: if two terminals are disconnected.
    """
    G = as_unit_point(G)
    if stats is None:
        stats = DpsStats()
    if G.k <= 1:
        return Subgraph(G, G.terminals)
    H0 = build_h0(G)
    stats.h0_vertices = len(_non_terminals(G, H0.vertex_set))
    augmented = augment_near_pairs(G, H0)
    stats.augmentation_vertices = len(_non_terminals(G, augmented.vertex_set - H0.vertex_set))
    star = build_dps_recursive(
        G, H0, -math.inf, math.inf, stats=stats, check=check, base=augmented, paths=_paths_to_last(G)
    )
    stats.recursion_vertices = len(_non_terminals(G, star.vertex_set - augmented.vertex_set))
    return _repair(G, augmented | star, stats)


def build_dps(G, check=False):
    """
    Builds a distance-preserving subgraph of any interval instance with O(k log k) branching vertices:
    the instance is normalized to a unit/point instance, solved there, and the result is lifted back.

    Args:
        G (Instance): interval instance with pairwise connected terminals.
        check (bool, optional): debug mode, verify cross-window pairs after every merge.

    Returns:
        (DpsResult): subgraph, unit/point subgraph, normalization map and counters.

    Raises:
        DisconnectedTerminalsError: if two terminals are disconnected.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.random.gen_random(40, 6, seed=3)
        result = dpsub.construction.dps.build_dps(G)
        dpsub.subgraph.verify_preserving(G, result.subgraph).ok
        # True
        ```
    """
    check_terminals_connected(G)
    stats = DpsStats()
    unit_point, normalization = normalize(G)
    H_unit = build_dps_unit_point(unit_point, check=check, stats=stats)
    H = _repair(G, lift(H_unit, normalization, G), stats)
    return DpsResult(subgraph=H, unit_point=H_unit, normalization=normalization, stats=stats)
