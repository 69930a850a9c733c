from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import dpsub
from dpsub.instance import (
    DisconnectedTerminalsError,
    Interval,
    Path,
    UnitPointInstance,
    as_interval,
    as_unit_point,
    bfs_distance,
    build_instance,
    check_terminals_connected,
    greedy_path,
    greedy_walk,
    shortest_path,
    window,
)


# arrange test
@pytest.fixture
def small_instance():
    return build_instance([(0, 1), (0.5, 1.5), (2, 3)], [True, False, True])

@pytest.fixture
def hard3():
    return dpsub.generators.hard.gen_hard(3)

# test class
class TestInterval:
    def test_exact_coordinates(self):
        interval = Interval(0.1, "1/3")
        # test types
        assert type(interval.left) is Fraction
        # test values
        assert interval.left == Fraction(1, 10)
        assert interval.length == Fraction(7, 30)

    def test_predicates(self):
        # test values
        assert Interval(0, 0).is_point()
        assert Interval(2, 3).is_unit()
        assert Interval(0, 1).intersects(Interval(1, 2))
        assert not Interval(0, 1).intersects(Interval(1.5, 2))
        assert Interval(0, 3).strictly_contains(Interval(1, 2))
        assert not Interval(0, 3).strictly_contains(Interval(0, 2))

    def test_invalid(self):
        with pytest.raises(ValueError):
            Interval(2, 1)
        with pytest.raises(TypeError):
            as_interval(3)
        # test values
        assert as_interval((1, 2)) == Interval(1, 2)

class TestPath:
    def test_path(self, small_instance):
        path = Path((0, 1))
        # test values
        assert path.length == 1
        assert path.edges() == [(0, 1)]
        assert path.is_valid_in(small_instance)
        assert not Path((0, 2)).is_valid_in(small_instance)

    def test_invalid(self):
        with pytest.raises(ValueError):
            Path(())
        with pytest.raises(ValueError):
            Path((1, 2, 1))

class TestInstance:
    def test_canonical_order(self):
        G = build_instance([(2, 5), (0, 1), (0, 3)], [False, True, True], labels=["a", "b", "c"])
        # test values
        assert G.labels == ("b", "c", "a")
        assert G.index_map == (2, 0, 1)
        assert G.order == (1, 2, 0)
        assert G.terminals == (0, 1)

    def test_edges(self, small_instance):
        # test values
        assert small_instance.edges() == [(0, 1)]
        assert small_instance.has_edge(1, 0)
        assert not small_instance.has_edge(0, 2)

    def test_farthest(self, hard3):
        t1 = hard3.index_of("t1")
        # test values
        assert hard3.labels[hard3.farthest[t1]] == "v1"
        assert hard3.labels[hard3.farthest[hard3.index_of("v2")]] == "v3"

    def test_farthest_isolated(self):
        G = build_instance([(0, 1), (3, 4)], [True, True])
        # test values
        assert G.farthest == (None, None)

    def test_terminal_coordinates(self, hard3):
        # test values
        assert hard3.terminal_coordinates == (Fraction(1, 2), Fraction(5, 2), Fraction(9, 2))

    def test_unit_point(self):
        G = build_instance([(0, 0), (0, 1), (0.5, 1.5), (1.5, 1.5)], [True, False, False, True])
        # test values
        assert G.is_unit_point()
        assert type(as_unit_point(G)) is UnitPointInstance
        with pytest.raises(ValueError):
            as_unit_point(build_instance([(0, 2), (1, 1)], [False, True]))

    def test_empty(self):
        with pytest.raises(ValueError):
            build_instance([], [])
        with pytest.raises(ValueError):
            build_instance([(0, 1)], [True, False])

def test_check_terminals_connected():
    G = build_instance([(0, 0), (2, 2), (0, 1)], [True, True, False])
    with pytest.raises(DisconnectedTerminalsError) as error:
        check_terminals_connected(G)
    # test values
    assert error.value.pair == (0, 2)

def test_bfs_distance(hard3):
    t1, t2, t3 = hard3.terminals
    # test values
    assert bfs_distance(hard3, t1, t2) == 3
    assert bfs_distance(hard3, t1, t3) == 5
    assert bfs_distance(hard3, t2, t2) == 0

def test_shortest_path(hard3):
    t1, _, t3 = hard3.terminals
    path = shortest_path(hard3, t1, t3)
    # test values
    assert path.length == 5
    assert path.is_valid_in(hard3)
    assert shortest_path(build_instance([(0, 1), (2, 3)], [True, True]), 0, 1) is None

class TestGreedyPath:
    def test_hard(self, hard3):
        t1, _, t3 = hard3.terminals
        path = greedy_path(hard3, t1, t3)
        # test values
        assert [hard3.labels[v] for v in path] == ["t1", "v1", "v2", "v3", "v4", "t3"]

    def test_adjacent(self, small_instance):
        # test values
        assert list(greedy_path(small_instance, 0, 1)) == [0, 1]
        assert list(greedy_path(small_instance, 1, 1)) == [1]

    def test_disconnected(self, small_instance):
        # test values
        assert greedy_path(small_instance, 0, 2) is None

    def test_order(self, small_instance):
        with pytest.raises(ValueError):
            greedy_path(small_instance, 1, 0)

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 10**6), n=st.integers(4, 60), k=st.integers(2, 10))
    def test_greedy_is_shortest(self, seed, n, k):
        G = dpsub.generators.random.gen_random(max(n, k), k, seed=seed)
        terminals = G.terminals
        dist = G.terminal_distances
        for i in range(len(terminals)):
            for j in range(i + 1, len(terminals)):
                # test values
                assert greedy_path(G, terminals[i], terminals[j]).length == dist[i, j]

@pytest.mark.slow
def test_greedy_is_shortest_seeded():
    rng = np.random.default_rng(1)
    for seed in range(500):
        n = int(rng.integers(12, 101))
        k = int(rng.integers(2, 13))
        flavor = "general" if seed % 2 else "unit_point"
        G = dpsub.generators.random.gen_random(n, k, seed=seed, flavor=flavor)
        terminals = G.terminals
        dist = G.terminal_distances
        for i in range(len(terminals)):
            for j in range(i + 1, len(terminals)):
                # test values
                assert greedy_path(G, terminals[i], terminals[j]).length == dist[i, j]

def test_greedy_walk(hard3):
    t1 = hard3.index_of("t1")
    walk = greedy_walk(hard3, t1)
    # test values
    assert [hard3.labels[v] for v in walk] == ["t1", "v1", "v2", "v3", "v4", "t3"]
    assert len(greedy_walk(hard3, t1, steps=2)) == 3
    assert greedy_walk(hard3, t1, allowed=lambda a, b: False) == [t1]

def test_window(hard3):
    sub, kept = window(hard3, 2, 3)
    # test values
    assert [hard3.labels[v] for v in kept] == list(sub.labels)
    assert set(sub.labels) == {"v1", "v2", "v3", "t2"}
    closed, _ = window(hard3, Fraction(1, 2), Fraction(5, 2))
    right_open, _ = window(hard3, Fraction(1, 2), Fraction(5, 2), right_open=True)
    assert "t2" in closed.labels
    assert "t2" not in right_open.labels
    with pytest.raises(ValueError):
        window(hard3, 3, 2)
