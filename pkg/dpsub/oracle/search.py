# @author Augustin Mortier
# @desc dpsub - Exact minimum number of branching vertices by exhaustive search

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from rich.progress import track
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from dpsub.graph import bfs_distances
from dpsub.oracle.weighted import terminal_distances, weighted_distances_from
from dpsub.subgraph import Subgraph, branching_edges, branching_vertices


@dataclass(frozen=True)
class SearchBudget:
    """
    Limits of an exhaustive search. A search hitting a limit raises BudgetExceeded.

    Attributes:
        max_candidate_edges (int): largest number of candidate edges.
        max_states (int): largest number of visited search states.
        timeout (float): wall-clock limit, in seconds.
    """

    max_candidate_edges: int = 22
    max_states: int = 2**22
    timeout: float = 60.0


class BudgetExceeded(RuntimeError):
    """
    Raised when a search exceeds one of the limits of its SearchBudget.
    """

    def __init__(self, limit, value, bound):
        self.limit = limit
        self.value = value
        self.bound = bound
        super().__init__(f"Search budget exceeded: {limit} = {value} is over {bound}.")


class _Clock:
    def __init__(self, budget):
        self.budget = budget
        self.states = 0
        self.start = time.monotonic()

    def tick(self, states=1):
        self.states += states
        if self.states > self.budget.max_states:
            raise BudgetExceeded("max_states", self.states, self.budget.max_states)
        elapsed = time.monotonic() - self.start
        if elapsed > self.budget.timeout:
            raise BudgetExceeded("timeout", round(elapsed, 3), self.budget.timeout)


class _Problem:
    """
    Distance constraints `d_H(s, t) ≤ d_G(s, t) + slack` over the connected ordered (directed hosts) or unordered
    (undirected hosts) pairs of distinct terminals.
    """

    def __init__(self, G, slack):
        if slack < 0:
            raise ValueError(f"slack must be non-negative, got {slack}.")
        self.G = G
        self.slack = slack
        self.directed = getattr(G, "directed", False)
        self.terminals = list(G.terminals)
        self.d_term = terminal_distances(G) if self.directed else np.asarray(G.terminal_distances)
        k = len(self.terminals)
        self.mask = np.isfinite(self.d_term) & ~np.eye(k, dtype=bool)
        if not self.directed:
            self.mask &= np.triu(np.ones((k, k), dtype=bool), 1)
        self.limit = np.where(self.mask, self.d_term + slack, np.inf)

    def _weighted(self, edges):
        return [(u, v, self.G.weight(u, v)) for u, v in edges]

    def distances(self, edges):
        if self.directed:
            dist = weighted_distances_from(self.G.n, self._weighted(edges), self.terminals)
        else:
            dist = bfs_distances(self.G.n, list(edges), self.terminals)
        return dist[:, self.terminals]

    def feasible(self, edges):
        if not self.mask.any():
            return True
        return bool(np.all(self.distances(edges)[self.mask] <= self.limit[self.mask]))

    def candidates(self, restrict=True):
        """
        Host edges lying on a walk of length at most `d(s, t) + slack` between some constrained pair (s, t).
        """
        edges = self.G.edges()
        if not restrict:
            return edges
        if not self.mask.any():
            return []
        if self.directed:
            weighted = self._weighted(edges)
            d_from = weighted_distances_from(self.G.n, weighted, self.terminals)
            d_to = weighted_distances_from(self.G.n, [(v, u, w) for u, v, w in weighted], self.terminals)
        else:
            d_from = d_to = self.G.distances_from(self.terminals)
        kept = []
        for u, v in edges:
            w = self.G.weight(u, v) if self.directed else 1
            through = d_from[:, u][:, None] + w + d_to[:, v][None, :]
            if not self.directed:
                through = np.minimum(through, d_from[:, v][:, None] + w + d_to[:, u][None, :])
            if np.any(through[self.mask] <= self.limit[self.mask]):
                kept.append((u, v))
        return kept


def _neighbour_sets(n, edges):
    neighbours = [set() for _ in range(n)]
    for u, v in edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    return neighbours


class _CappedSearch:
    """
    Depth-first search for a feasible edge set in which every capped vertex has at most two distinct neighbours.
    Edges touching no capped vertex are always kept.
    """

    def __init__(self, problem, candidates, capped, clock):
        self.problem = problem
        self.capped = capped
        self.clock = clock
        self.free = [e for e in candidates if e[0] not in capped and e[1] not in capped]
        self.edges = [e for e in candidates if e[0] in capped or e[1] in capped]
        self.touching = {c: [] for c in capped}
        for index, (u, v) in enumerate(self.edges):
            for c in (u, v):
                if c in capped:
                    self.touching[c].append(index)
        self.pairs = self._distance_two_pairs(candidates) if self._matching_applies() else []
        self.lookup = {}
        for index, (u, v) in enumerate(self.edges):
            self.lookup[(min(u, v), max(u, v))] = index

    def _matching_applies(self):
        return not self.problem.directed and self.problem.slack == 0

    def _distance_two_pairs(self, candidates):
        # (a, b, common neighbours) for the constrained pairs at distance two
        neighbours = _neighbour_sets(self.problem.G.n, candidates)
        terminals = self.problem.terminals
        pairs = []
        for i, j in zip(*np.nonzero(self.problem.mask)):
            if self.problem.d_term[i, j] == 2:
                a, b = terminals[i], terminals[j]
                pairs.append((a, b, sorted(neighbours[a] & neighbours[b])))
        return pairs

    def run(self):
        return self._visit([None] * len(self.edges))

    def _visit(self, status):
        self.clock.tick()
        if not self._propagate(status):
            return None
        included = self.free + [e for e, s in zip(self.edges, status) if s]
        if self.problem.feasible(included):
            return included
        undecided = [index for index, s in enumerate(status) if s is None]
        if not undecided:
            return None
        for choice in (False, True):
            branch = list(status)
            branch[undecided[0]] = choice
            found = self._visit(branch)
            if found is not None:
                return found
        return None

    def _propagate(self, status):
        while True:
            if not self._apply_caps(status):
                return False
            optimistic = self.free + [e for e, s in zip(self.edges, status) if s is not False]
            if not self.problem.feasible(optimistic):
                return False
            if not self._matching_holds(status):
                return False
            forced = []
            for index, s in enumerate(status):
                if s is None:
                    rest = [e for e in optimistic if e != self.edges[index]]
                    if not self.problem.feasible(rest):
                        forced.append(index)
            if not forced:
                return True
            for index in forced:
                status[index] = True

    def _apply_caps(self, status):
        for c, indices in self.touching.items():
            kept = {self._other(index, c) for index in indices if status[index]}
            if len(kept) > 2:
                return False
            if len(kept) == 2:
                for index in indices:
                    if status[index] is None and self._other(index, c) not in kept:
                        status[index] = False
        return True

    def _other(self, index, c):
        u, v = self.edges[index]
        return v if u == c else u

    def _usable(self, status, u, v):
        index = self.lookup.get((min(u, v), max(u, v)))
        return index is None or status[index] is not False

    def _matching_holds(self, status):
        # a capped middle has two neighbours, so it serves a single pair at distance two
        columns = {}
        rows = []
        for a, b, middles in self.pairs:
            usable = [m for m in middles if self._usable(status, a, m) and self._usable(status, m, b)]
            if any(m not in self.capped for m in usable):
                continue
            if not usable:
                return False
            rows.append([columns.setdefault(m, len(columns)) for m in usable])
        if not rows:
            return True
        if len(rows) > len(columns):
            return False
        data, indices, indptr = [], [], [0]
        for row in rows:
            indices.extend(row)
            data.extend([1] * len(row))
            indptr.append(len(indices))
        graph = csr_matrix((data, indices, indptr), shape=(len(rows), len(columns)))
        matching = maximum_bipartite_matching(graph, perm_type="column")
        return bool(np.all(matching >= 0))


def _min_branching(G, slack, count_terminal_branching, budget, restrict_candidates, verbose):
    problem = _Problem(G, slack)
    candidates = problem.candidates(restrict_candidates)
    if len(candidates) > budget.max_candidate_edges:
        raise BudgetExceeded("max_candidate_edges", len(candidates), budget.max_candidate_edges)
    assert problem.feasible(candidates), "candidate edges do not satisfy the distance constraints"
    neighbours = _neighbour_sets(G.n, candidates)
    eligible = [
        v
        for v in range(G.n)
        if len(neighbours[v]) >= 3 and (count_terminal_branching or not G.is_terminal(v))
    ]
    clock = _Clock(budget)
    for t in track(
        range(len(eligible) + 1), description="Searching branching counts...", disable=not verbose
    ):
        for allowed in combinations(eligible, t):
            capped = set(eligible) - set(allowed)
            edges = _CappedSearch(problem, candidates, capped, clock).run()
            if edges is not None:
                return t, Subgraph(G, G.terminals, edges)
    raise AssertionError("the candidate edges with every vertex allowed to branch are not feasible")


def min_branching_dps(
    G, count_terminal_branching=True, budget=SearchBudget(), restrict_candidates=True, verbose=False
):
    """
    Returns the minimum number of branching vertices over all distance-preserving subgraphs of G, with a witness.

    Branching counts 0, 1, 2, ... are tried in turn. For each count t and each set B of t vertices allowed to branch,
    a depth-first search over the candidate edges looks for a distance-preserving edge set in which every other vertex
    has at most two neighbours, pruning with optimistic distances, forced edges, and the matching of terminal pairs at
    distance two to their possible middle vertices.

    Args:
        G (TerminalGraph | WeightedDigraph): host graph; terminal pairs in different components are ignored.
        count_terminal_branching (bool, optional): count terminals of degree ≥ 3 as branching vertices.
            With False, only non-terminals are counted.
        budget (SearchBudget, optional): search limits.
        restrict_candidates (bool, optional): only search over edges lying on a shortest path between two terminals.
        verbose (bool, optional): show a progress bar over the branching counts.

    Returns:
        (tuple): (minimum, witness Subgraph).

    Raises:
        BudgetExceeded: if a limit of the budget is hit.

    Example:
        ```python
        import dpsub
        sc = dpsub.generators.setcover.SetCoverInstance(2, ({1, 2},))
        G = dpsub.generators.setcover.gen_gset(sc)
        dpsub.oracle.search.min_branching_dps(G, count_terminal_branching=False)[0]
        # 1
        ```
    """
    return _min_branching(G, 0, count_terminal_branching, budget, restrict_candidates, verbose)


def min_branching_das(G, slack=1, budget=SearchBudget(), restrict_candidates=True, verbose=False):
    """
    Returns the minimum number of branching vertices over all subgraphs H of G with
    `d_H(u, v) ≤ d_G(u, v) + slack` for every pair of terminals, with a witness.

    Args:
        G (TerminalGraph): host graph.
        slack (int, optional): additive slack.
        budget (SearchBudget, optional): search limits.
        restrict_candidates (bool, optional): only search over edges lying on a walk of length at most
            `d_G(s, t) + slack` between two terminals s and t.
        verbose (bool, optional): show a progress bar over the branching counts.

    Returns:
        (tuple): (minimum, witness Subgraph).

    Raises:
        BudgetExceeded: if a limit of the budget is hit.
    """
    return _min_branching(G, slack, True, budget, restrict_candidates, verbose)


def exhaustive_min_branching(
    G, slack=0, count_terminal_branching=True, budget=SearchBudget(), restrict_candidates=True
):
    """
    Enumerates every subset of the candidate edges.

    Args:
        G (TerminalGraph | WeightedDigraph): host graph.
        slack (int, optional): additive slack, 0 for distance-preserving subgraphs.
        count_terminal_branching (bool, optional): count terminals of degree ≥ 3 as branching vertices.
        budget (SearchBudget, optional): search limits; `max_states` bounds the number of subsets.
        restrict_candidates (bool, optional): only enumerate subsets of the candidate edges.

    Returns:
        (tuple): (minimum number of branching vertices, least number of branching edges among the subgraphs reaching
            that minimum, one such subgraph).

    Raises:
        BudgetExceeded: if a limit of the budget is hit.
    """
    problem = _Problem(G, slack)
    candidates = problem.candidates(restrict_candidates)
    m = len(candidates)
    if m > budget.max_candidate_edges:
        raise BudgetExceeded("max_candidate_edges", m, budget.max_candidate_edges)
    if 2**m > budget.max_states:
        raise BudgetExceeded("max_states", 2**m, budget.max_states)
    clock = _Clock(budget)
    best = None
    for subset in range(2**m):
        clock.tick()
        edges = [candidates[i] for i in range(m) if subset >> i & 1]
        if not problem.feasible(edges):
            continue
        H = Subgraph(G, G.terminals, edges)
        key = (branching_vertices(H, terminals=count_terminal_branching)[0], branching_edges(H))
        if best is None or key < best[0]:
            best = (key, H)
    (count, edge_count), witness = best
    return count, edge_count, witness
