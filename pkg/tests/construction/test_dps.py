from fractions import Fraction

import pytest

import dpsub
from dpsub.construction.dps import (
    DpsResult,
    DpsStats,
    augment_near_pairs,
    build_dps,
    build_dps_recursive,
    build_dps_unit_point,
    _repair,
    build_h0,
    choose_cut,
)
from dpsub.instance import DisconnectedTerminalsError, UnitPointInstance, build_instance
from dpsub.subgraph import Subgraph, verify_preserving


# arrange test
@pytest.fixture
def chain():
    intervals = [(0, 0), (5, 5), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    return build_instance(intervals, [True] * 2 + [False] * 5)

@pytest.fixture
def tied():
    # three point terminals share a coordinate
    intervals = [(0, 1), (0.9, 1.9), (1.8, 2.8), (2.7, 3.7), (0.5, 0.5), (0.5, 0.5), (0.5, 0.5), (3.5, 3.5)]
    return UnitPointInstance(intervals, [False] * 4 + [True] * 4)

@pytest.fixture
def unit_point():
    return dpsub.generators.random.gen_random(48, 8, seed=5, flavor="unit_point")

def test_choose_cut(chain):
    # test values
    assert choose_cut(chain, 0, 5) == 4
    with pytest.raises(ValueError):
        choose_cut(chain, 0, 1)
    with pytest.raises(ValueError):
        choose_cut(chain, Fraction(1, 2), Fraction(9, 2))

def test_build_h0(unit_point):
    H0 = build_h0(unit_point)
    last = unit_point.terminals[-1]
    d_host = unit_point.distances_from([last])[0]
    d_sub = H0.distances_from([last])[0]
    # test values
    for t in unit_point.terminals:
        assert d_sub[t] == d_host[t]

def test_augment_near_pairs(chain):
    H = Subgraph(chain, chain.terminals)
    # test values
    assert augment_near_pairs(chain, H) is H
    assert verify_preserving(chain, augment_near_pairs(chain, H, radius=6)).ok

class TestUnitPoint:
    def test_preserving(self, unit_point):
        stats = DpsStats()
        H = build_dps_unit_point(unit_point, stats=stats)
        # test values
        assert verify_preserving(unit_point, H).ok
        assert stats.h0_vertices > 0
        assert len(stats.levels) > 0

    def test_level_accounting(self, unit_point):
        stats = DpsStats()
        build_dps_unit_point(unit_point, stats=stats)
        # test values
        for record in stats.levels:
            assert record.added <= 4 * record.left + record.right
            assert record.added <= 3 * record.terminals
            assert record.right >= record.left
            assert record.b - record.x >= 1

    def test_tied_coordinates(self, tied):
        stats = DpsStats()
        H = build_dps_unit_point(tied, stats=stats)
        # test values
        assert verify_preserving(tied, H).ok
        assert [record.x for record in stats.levels] == [Fraction(5, 2)]
        assert (stats.levels[0].left, stats.levels[0].right) == (3, 1)

    def test_single_terminal(self):
        G = UnitPointInstance([(0, 1), (0.5, 0.5)], [False, True])
        # test values
        assert build_dps_unit_point(G).vertices() == [G.terminals[0]]

    def test_recursive_window(self, unit_point):
        H0 = build_h0(unit_point)
        narrow = build_dps_recursive(unit_point, H0, 0, 1)
        # test values
        assert len(narrow.vertex_set) == 0

class TestBuildDps:
    def test_result(self):
        G = dpsub.generators.random.gen_random(40, 6, seed=3)
        result = build_dps(G)
        # test types
        assert type(result) is DpsResult
        # test values
        assert verify_preserving(G, result.subgraph).ok
        assert verify_preserving(result.unit_point.host, result.unit_point).ok
        assert result.unit_point.host.k == 2 * G.k

    def test_check(self):
        G = dpsub.generators.random.gen_random(60, 10, seed=8)
        result = build_dps(G, check=True)
        # test types
        assert type(result.stats.join_violations) is list
        # test values
        assert verify_preserving(G, result.subgraph).ok
        assert result.stats.join_violations == []
        assert result.stats.repaired_pairs == []

    def test_repair(self, chain):
        stats = DpsStats()
        with pytest.warns(UserWarning):
            H = _repair(chain, Subgraph(chain, chain.terminals), stats)
        # test values
        assert verify_preserving(chain, H).ok
        assert stats.repaired_pairs == [tuple(chain.terminals)]
        assert _repair(chain, H, DpsStats()) is H

    def test_disconnected(self):
        with pytest.raises(DisconnectedTerminalsError):
            build_dps(build_instance([(0, 1), (2, 3), (0.5, 0.5)], [True, True, False]))

    def test_coincident_terminals(self):
        G = dpsub.generators.random.gen_random(5, 5, flavor="unit_point")
        # test values
        assert verify_preserving(G, build_dps(G).subgraph).ok

@pytest.mark.slow
def test_dps_seeded():
    for seed in range(500):
        k = 2 + seed % 23
        flavor = "general" if seed % 3 else "unit_point"
        G = dpsub.generators.random.gen_random(min(200, 8 * k), k, seed=seed, flavor=flavor)
        result = build_dps(G, check=True)
        # test values
        assert verify_preserving(G, result.subgraph).ok
        assert result.stats.join_violations == []
        assert result.stats.repaired_pairs == []
        for record in result.stats.levels:
            assert record.added <= 3 * record.terminals
