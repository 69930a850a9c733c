# @author Augustin Mortier
# @desc dpsub - Structural checks on shortest paths of interval graphs

import warnings

import numpy as np
from rich.progress import track

from dpsub.instance import greedy_path, greedy_walk


def _oriented(path):
    vertices = list(path)
    if len(vertices) > 1 and vertices[0] > vertices[-1]:
        vertices.reverse()
    return vertices


def order_violations(G, path):
    """
    Checks that a shortest path running from v_1 to v_r with v_1 ≺ v_r visits vertices in increasing order,
    except possibly for the last step.

    Args:
        G (Instance): interval instance.
        path (Path or list): shortest path of G. It is oriented so that its first vertex precedes its last one.

    Returns:
        (list): positions `i` (in the oriented path) where `path[i] ≺ path[i+1]` fails.
    """
    vertices = _oriented(path)
    return [i for i in range(len(vertices) - 2) if not vertices[i] < vertices[i + 1]]


def point_violations(G, path):
    """
    Checks that no real point lies in more than two intervals of a greedy path.

    The number of path intervals containing a point is maximal at some left endpoint, so the points checked are the left endpoints of the path.

    Args:
        G (Instance): interval instance.
        path (Path or list): greedy path of G.

    Returns:
        (list): (point, count) pairs with count > 2.
    """
    intervals = [G.intervals[v] for v in path]
    violations = []
    for a in sorted({interval.left for interval in intervals}):
        count = sum(1 for interval in intervals if interval.contains_point(a))
        if count > 2:
            violations.append((a, count))
    return violations


def interval_violations(G, path, vertices=None):
    """
    Checks that every vertex x of G is adjacent to at most three vertices of a shortest path.

    Args:
        G (Instance): interval instance.
        path (Path or list): shortest path of G.
        vertices (list, optional): vertices to check. Defaults to every vertex of G.

    Returns:
        (list): (x, count) pairs with count > 3.
    """
    path = list(path)
    if vertices is None:
        vertices = range(G.n)
    violations = []
    for x in vertices:
        count = sum(1 for v in path if G.has_edge(x, v))
        if count > 3:
            violations.append((x, count))
    return violations


def domination_violations(G, path):
    """
    Checks that an interval strictly contained in another one only appears on a greedy path as an endpoint.

    Args:
        G (Instance): interval instance.
        path (Path or list): greedy path of G.

    Returns:
        (list): interior vertices y of the path strictly contained in some interval x.
    """
    path = list(path)
    intervals = G.intervals
    violations = []
    for y in path[1:-1]:
        if any(intervals[x].strictly_contains(intervals[y]) for x in range(G.n)):
            violations.append(y)
    return violations


def link_violations(G, v, w, walks=None):
    """
    Compares the greedy walks from two adjacent vertices v ≺ w.

    Writing (v, v_1, ..., v_l) and (w, w_1, ..., w_l') for greedy paths from v and w, `right(v_l) < right(w_l')` implies `l ≤ l'`.
    Equivalently, the walk from v reaches in j+1 steps at least as far as the walk from w does in j steps.

    Args:
        G (Instance): interval instance.
        v (int): first vertex.
        w (int): second vertex, adjacent to v with v ≺ w.
        walks (dict, optional): precomputed greedy walks by start vertex.

    Returns:
        (list): (l, l') pairs contradicting the implication.

    Raises:
        ValueError: if v and w are not adjacent or v ⊀ w.
    """
    if not v < w:
        raise ValueError(f"link_violations needs v ≺ w, got v={v}, w={w}.")
    if not G.has_edge(v, w):
        raise ValueError(f"Vertices {v} and {w} are not adjacent.")
    walk_v = walks[v] if walks is not None else greedy_walk(G, v)
    walk_w = walks[w] if walks is not None else greedy_walk(G, w)
    right = [interval.right for interval in G.intervals]
    violations = []
    for steps_w in range(len(walk_w)):
        steps_v = steps_w + 1
        if steps_v < len(walk_v) and right[walk_v[steps_v]] < right[walk_w[steps_w]]:
            violations.append((steps_v, steps_w))
    return violations


def _walk_successors(G):
    # rank of the right endpoint, and next vertex of the greedy walk;
    # a vertex is its own successor where the walk stops
    rank = np.zeros(G.n, dtype=int)
    for v in range(1, G.n):
        rank[v] = rank[v - 1] + (G.intervals[v].right != G.intervals[v - 1].right)
    successor = np.arange(G.n)
    for v, step in enumerate(G.farthest):
        if step is not None and rank[step] > rank[v]:
            successor[v] = step
    return rank, successor


def check_walk_links(G, pairs=None, verbose=False):
    """
    Runs the comparison of link_violations over adjacent pairs of G.

    The greedy walks of all pairs are advanced together, step by step, on numpy arrays;
    link_violations is only called back on the pairs that fail, to report their (l, l') pairs.

    Args:
        G (Instance): interval instance.
        pairs (list, optional): (v, w) pairs with v ≺ w, repetitions allowed. Defaults to every edge of G.
        verbose (bool, optional): show a progress bar over the failing pairs.

    Returns:
        (tuple): (number of checked pairs, list of (v, w, violations)).

    Raises:
        ValueError: if a pair is not adjacent or not ordered.
    """
    if pairs is None:
        pairs = G.edges()
    else:
        for v, w in pairs:
            if not v < w:
                raise ValueError(f"link_violations needs v ≺ w, got v={v}, w={w}.")
            if not G.has_edge(v, w):
                raise ValueError(f"Vertices {v} and {w} are not adjacent.")
    if len(pairs) == 0:
        return 0, []
    rank, successor = _walk_successors(G)
    first = np.array([v for v, _ in pairs])
    second = np.array([w for _, w in pairs])

    # walk from v one step ahead of the walk from w
    ahead = successor[first]
    alive_v = ahead != first
    behind = second
    alive_w = np.ones(len(pairs), dtype=bool)
    failing = np.zeros(len(pairs), dtype=bool)
    while np.any(alive_v & alive_w):
        failing |= alive_v & alive_w & (rank[ahead] < rank[behind])
        step_v, step_w = successor[ahead], successor[behind]
        alive_v &= step_v != ahead
        alive_w &= step_w != behind
        ahead, behind = step_v, step_w

    walks = {}
    found = []
    failing_pairs = sorted({tuple(pairs[i]) for i in np.flatnonzero(failing)})
    for v, w in track(failing_pairs, description="walk links", disable=not verbose):
        for u in (v, w):
            if u not in walks:
                walks[u] = greedy_walk(G, u)
        found.append((v, w, link_violations(G, v, w, walks=walks)))
    return len(pairs), found


def frontier_violations(G, H, warn=False):
    """
    Walks greedily from every terminal towards the last terminal, in G and in H, and compares the two walks step for step.
    At every step the two current vertices are expected to be equal or adjacent in G.

    Args:
        G (Instance): interval instance.
        H (Subgraph): subgraph of G, typically the +1 approximating subgraph.
        warn (bool, optional): emit a warning when mismatches are found.

    Returns:
        (list): (terminal, step, vertex in G, vertex in H) tuples where the two walks diverge non-adjacently.
    """
    terminals = G.terminals
    if len(terminals) < 2:
        return []
    last = terminals[-1]
    mismatches = []
    for t in terminals[:-1]:
        path = greedy_path(G, t, last)
        if path is None:
            continue
        walk = greedy_walk(G, t, allowed=H.has_edge)
        # the last vertex of a greedy path is appended, not stepped to
        for p in range(1, min(len(path) - 1, len(walk))):
            in_g, in_h = path[p], walk[p]
            if in_g != in_h and not G.has_edge(in_g, in_h):
                mismatches.append((t, p, in_g, in_h))
    if warn and mismatches:
        warnings.warn(f"{len(mismatches)} greedy frontier mismatches between G and H.")
    return mismatches
