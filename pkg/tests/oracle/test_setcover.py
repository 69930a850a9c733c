import math

from dpsub.generators.setcover import SetCoverInstance
from dpsub.oracle.setcover import min_set_cover


# test class
class TestMinSetCover:
    def test_values(self):
        # test values
        assert min_set_cover(SetCoverInstance(2, ({1}, {2}))) == 2
        assert min_set_cover(SetCoverInstance(2, ({1, 2}, {1}))) == 1
        assert min_set_cover(SetCoverInstance(4, ({1, 2}, {2, 3}, {3, 4}, {1, 4}))) == 2
        assert min_set_cover(SetCoverInstance(3, ({1}, {2}, {3}, {1, 2}))) == 2

    def test_uncoverable(self):
        # test values
        assert min_set_cover(SetCoverInstance(2, ({1},))) == math.inf
        assert min_set_cover(SetCoverInstance(1, ())) == math.inf
