# @author Augustin Mortier
# @desc dpsub - +1 distance-approximating subgraph with O(k) branching vertices

import warnings
from dataclasses import dataclass

from dpsub.checks import frontier_violations
from dpsub.instance import DisconnectedTerminalsError, Path, greedy_path
from dpsub.subgraph import Subgraph


@dataclass(frozen=True)
class DasResult:
    """
    Output of build_das.

    Attributes:
        subgraph (Subgraph): the +1 approximating subgraph.
        spine (Path): greedy path from the first to the last terminal.
        attachment_edges (tuple): (terminal, vertex) edges joining every middle terminal to the tree.
        tree (Subgraph): union of the greedy paths from the first terminal.
    """

    subgraph: Subgraph
    spine: Path
    attachment_edges: tuple
    tree: Subgraph


def _greedy_or_raise(G, u, v):
    path = greedy_path(G, u, v)
    if path is None:
        raise DisconnectedTerminalsError(u, v)
    return path


def build_tree(G, i):
    """
    Returns the union of the greedy paths from the i-th terminal to every later terminal.

    Args:
        G (Instance): interval instance.
        i (int): position of the source in `G.terminals` (0 for the first terminal).

    Returns:
        (Subgraph): union of greedy paths, reduced to the source when it is the last terminal.

    Raises:
        DisconnectedTerminalsError: if a later terminal is not reachable.
    """
    terminals = G.terminals
    if not 0 <= i < len(terminals):
        raise ValueError(f"Terminal position {i} out of range [0, {len(terminals)}).")
    source = terminals[i]
    paths = [_greedy_or_raise(G, source, t) for t in terminals[i + 1 :]]
    return Subgraph.from_paths(G, paths, vertices=[source])


def _attachments(G, vertices):
    middle = G.terminals[1:-1]
    middle_set = set(middle)
    edges = []
    for t in middle:
        for v in G.neighbors(t):
            # an edge between two middle terminals is listed once
            if v in vertices and not (v in middle_set and v < t):
                edges.append((t, v))
    return edges


def spine_form(G):
    """
    Returns the spine form of the +1 approximating subgraph: the greedy path from the first to the last terminal,
    plus every edge joining a middle terminal to a spine vertex or to another middle terminal.

    It coincides with the subgraph of build_das whenever each greedy path from the first terminal runs along the spine
    before its last step.

    Args:
        G (Instance): interval instance with at least two terminals.

    Returns:
        (Subgraph): spine form.
    """
    terminals = G.terminals
    if len(terminals) < 2:
        raise ValueError(f"The spine form needs at least two terminals, got {len(terminals)}.")
    spine = _greedy_or_raise(G, terminals[0], terminals[-1])
    vertices = set(spine) | set(terminals[1:-1])
    return Subgraph(G, vertices, spine.edges() + _attachments(G, vertices))


def _runs_along_spine(G, spine):
    first = G.terminals[0]
    for t in G.terminals[1:-1]:
        body = list(_greedy_or_raise(G, first, t))[:-1]
        if list(spine)[: len(body)] != body:
            return False
    return True


def build_das(G, check=False):
    """
    Builds the +1 distance-approximating subgraph: the tree of greedy paths from the first terminal,
    plus every edge of G joining a middle terminal to a vertex of that tree.

    Every pair of terminals gets `d_G ≤ d_H ≤ d_G + 1`, pairs involving the first terminal are preserved exactly,
    and each terminal contributes at most three branching vertices.

    Args:
        G (Instance): interval instance with at least two pairwise connected terminals.
        check (bool, optional): also compare greedy frontiers in G and in the result, warning on mismatches.

    Returns:
        (DasResult): subgraph, spine, attachment edges and tree.

    Raises:
        DisconnectedTerminalsError: if two terminals are disconnected.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.hard.gen_hard(5)
        result = dpsub.construction.das.build_das(G)
        dpsub.subgraph.verify_approx(G, result.subgraph, 1).ok
        # True
        ```
    """
    terminals = G.terminals
    if len(terminals) < 2:
        raise ValueError(f"build_das needs at least two terminals, got {len(terminals)}.")
    tree = build_tree(G, 0)
    attachments = _attachments(G, tree.vertex_set)
    subgraph = tree.with_edges(attachments)
    spine = _greedy_or_raise(G, terminals[0], terminals[-1])

    if _runs_along_spine(G, spine):
        assert subgraph.edge_set == spine_form(G).edge_set, "tree form and spine form differ"
    else:
        warnings.warn(
            "Greedy paths from the first terminal leave the spine: the spine form is not equivalent on this instance."
        )
    if check:
        frontier_violations(G, subgraph, warn=True)
    return DasResult(
        subgraph=subgraph, spine=spine, attachment_edges=tuple(sorted(attachments)), tree=tree
    )
