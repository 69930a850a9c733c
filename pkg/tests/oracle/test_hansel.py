import math

import pytest

from dpsub.oracle.hansel import BipartiteCoverFamily, hansel_verify


# arrange test
@pytest.fixture
def halves():
    return BipartiteCoverFamily(4, (((1, 3), (1, 4), (2, 3), (2, 4)), ((1, 2), (1, 4), (3, 2), (3, 4))))

# test class
class TestHanselVerify:
    def test_example(self, halves):
        # test values
        assert hansel_verify(halves) == (True, 8, 8.0)

    def test_not_covering(self, halves):
        fam = BipartiteCoverFamily(4, halves.graphs[:1])
        # test values
        assert hansel_verify(fam) == (False, 4, 8.0)

    def test_stars(self):
        # star at every vertex but the last
        n = 5
        fam = BipartiteCoverFamily(n, tuple(tuple((i, j) for j in range(i + 1, n + 1)) for i in range(1, n)))
        covers, total, bound = hansel_verify(fam)
        # test values
        assert covers
        assert total == sum(n - i + 1 for i in range(1, n))
        assert bound == pytest.approx(n * math.log2(n))

    def test_single_vertex(self):
        # test values
        assert hansel_verify(BipartiteCoverFamily(1, ())) == (True, 0, 0.0)

    def test_not_bipartite(self):
        triangle = BipartiteCoverFamily(3, (((1, 2), (2, 3), (1, 3)),))
        with pytest.raises(ValueError):
            hansel_verify(triangle)

    def test_invalid_edge(self):
        with pytest.raises(ValueError):
            BipartiteCoverFamily(3, (((1, 4),),))
        with pytest.raises(ValueError):
            BipartiteCoverFamily(3, (((2, 2),),))
