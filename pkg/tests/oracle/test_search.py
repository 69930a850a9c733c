import pytest

from dpsub.generators.hard import gen_hard
from dpsub.generators.manhattan import gen_manhattan
from dpsub.generators.setcover import SetCoverInstance, all_setcover_instances, gen_gset
from dpsub.generators.zero import gen_gzero, hansel_family
from dpsub.graph import TerminalGraph
from dpsub.oracle import search
from dpsub.oracle.hansel import hansel_verify
from dpsub.oracle.setcover import min_set_cover
from dpsub.subgraph import branching_vertices, verify_approx, verify_preserving


# test class
class TestMinBranchingDps:
    def test_gset_example(self):
        G = gen_gset(SetCoverInstance(2, ({1, 2},)))
        minimum, witness = search.min_branching_dps(G, count_terminal_branching=False)
        # test values
        assert minimum == 1
        assert verify_preserving(G, witness).ok
        assert branching_vertices(witness, terminals=False)[0] == 1

    def test_disconnected_terminals(self):
        G = TerminalGraph.from_edges(4, [(0, 1)], [True, True, True, False])
        minimum, witness = search.min_branching_dps(G)
        # test values
        assert minimum == 0
        assert witness.edges() == [(0, 1)]

    def test_manhattan(self):
        D = gen_manhattan(2)
        minimum, witness = search.min_branching_dps(D)
        # test values
        assert verify_preserving(D, witness).ok
        assert branching_vertices(witness)[0] == minimum
        for u, v in D.edges():
            if D.edge_kind(u, v) == "hor":
                assert witness.has_edge(u, v)

    def test_matches_exhaustive(self):
        G = gen_gzero(2)
        minimum, witness = search.min_branching_dps(G)
        count, _, best = search.exhaustive_min_branching(G)
        # test values
        assert minimum == count
        assert branching_vertices(witness)[0] == minimum
        assert verify_preserving(G, best).ok

    @pytest.mark.slow
    def test_manhattan_matches_exhaustive(self):
        D = gen_manhattan(2)
        # test values
        assert search.min_branching_dps(D)[0] == search.exhaustive_min_branching(D)[0]

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_gzero_witness_hansel(self, k):
        G = gen_gzero(k)
        minimum, witness = search.min_branching_dps(G, budget=search.SearchBudget(max_candidate_edges=64))
        fam, sizes = hansel_family(witness, k)
        covers, total, bound = hansel_verify(fam)
        # test values
        assert verify_preserving(G, witness).ok
        assert covers
        assert total >= bound
        assert total == sum(sizes.values())
        for I, size in sizes.items():
            assert size <= witness.degree(I)
        assert branching_vertices(witness)[0] == minimum <= G.n

    @pytest.mark.slow
    def test_setcover_equivalence(self):
        budget = search.SearchBudget(max_candidate_edges=64)
        checked = 0
        for sc in all_setcover_instances(3, 3):
            expected = min_set_cover(sc)
            if expected == float("inf"):
                continue
            minimum, _ = search.min_branching_dps(gen_gset(sc), count_terminal_branching=False, budget=budget)
            # test values
            assert minimum == expected, sc
            checked += 1
        assert checked == 87

class TestMinBranchingDas:
    def test_hard_small(self):
        G = gen_hard(4)
        minimum, witness = search.min_branching_das(G)
        # test values
        assert minimum >= 1
        assert verify_approx(G, witness, 1).ok
        assert branching_vertices(witness)[0] == minimum

    def test_matches_exhaustive(self):
        G = gen_hard(4)
        # test values
        assert search.min_branching_das(G)[0] == search.exhaustive_min_branching(G, slack=1)[0]

    def test_slack_zero(self):
        G = gen_gzero(2)
        # test values
        assert search.min_branching_das(G, slack=0)[0] == search.min_branching_dps(G)[0]

    @pytest.mark.slow
    def test_hard_lower_bound(self):
        # test values
        assert search.min_branching_das(gen_hard(5))[0] >= 2

    def test_invalid_slack(self):
        with pytest.raises(ValueError):
            search.min_branching_das(gen_hard(4), slack=-1)

class TestBudget:
    def test_defaults(self):
        budget = search.SearchBudget()
        # test values
        assert (budget.max_candidate_edges, budget.max_states, budget.timeout) == (22, 2**22, 60.0)

    def test_candidate_edges(self):
        with pytest.raises(search.BudgetExceeded) as excinfo:
            search.min_branching_dps(gen_gzero(4))
        # test types
        assert isinstance(excinfo.value, RuntimeError)
        # test values
        assert excinfo.value.limit == "max_candidate_edges"
        assert excinfo.value.bound == 22

    def test_states(self):
        with pytest.raises(search.BudgetExceeded) as excinfo:
            search.exhaustive_min_branching(gen_gzero(2), budget=search.SearchBudget(max_states=100))
        # test values
        assert excinfo.value.limit == "max_states"
        assert excinfo.value.value == 2 ** len(gen_gzero(2).edges())

    def test_timeout(self):
        with pytest.raises(search.BudgetExceeded) as excinfo:
            search.exhaustive_min_branching(gen_hard(3), budget=search.SearchBudget(timeout=-1.0))
        # test values
        assert excinfo.value.limit == "timeout"

    def test_unrestricted(self):
        G = gen_hard(3)
        restricted = search.min_branching_dps(G)[0]
        unrestricted = search.min_branching_dps(G, restrict_candidates=False)[0]
        # test values
        assert restricted == unrestricted
