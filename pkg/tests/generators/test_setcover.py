import pytest

from dpsub.generators import setcover


# arrange test
@pytest.fixture
def sc():
    return setcover.SetCoverInstance(3, ({1, 2}, {3}, {2, 3}))

# test class
class TestSetCoverInstance:
    def test_fields(self, sc):
        # test types
        assert all(type(s) is frozenset for s in sc.subsets)
        # test values
        assert sc.m == 3
        assert sc.to_dict() == {"n": 3, "subsets": [[1, 2], [3], [2, 3]]}

    def test_covers(self, sc):
        # test values
        assert sc.covers([0, 1])
        assert sc.covers([0, 2])
        assert not sc.covers([1, 2])
        assert not sc.covers([])

    def test_invalid(self):
        with pytest.raises(ValueError):
            setcover.SetCoverInstance(0, ())
        with pytest.raises(ValueError):
            setcover.SetCoverInstance(2, ({1, 3},))

class TestGenGset:
    def test_example(self):
        G = setcover.gen_gset(setcover.SetCoverInstance(2, ({1, 2},)))
        # test values
        assert (G.n, G.k) == (7, 6)

    def test_edges(self, sc):
        G = setcover.gen_gset(sc)
        t0, t1 = G.index_of("t0"), G.index_of("t1")
        # test values
        assert G.n == 3 * 4 + 3 + 2
        assert G.degree(t0) == 12
        assert G.degree(t1) == 3
        assert G.edge_count == 12 + 4 * (2 + 1 + 2) + 3
        assert G.has_edge(G.index_of("u2.4"), G.index_of("S3"))
        assert not G.has_edge(G.index_of("u1.1"), G.index_of("S2"))
        assert not G.is_terminal(G.index_of("S1"))

    def test_meta(self, sc):
        G = setcover.gen_gset(sc)
        # test values
        assert G.meta["generator"] == "gset"
        assert setcover.setcover_from_meta(G.meta) == sc

def test_all_instances():
    # test values
    assert len(setcover.all_setcover_instances(1, 2)) == 2
    assert len(setcover.all_setcover_instances(2, 1)) == 4
    assert len(setcover.all_setcover_instances(3, 3)) == 3 + 19 + 119
