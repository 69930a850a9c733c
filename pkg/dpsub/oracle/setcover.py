# @author Augustin Mortier
# @desc dpsub - Exhaustive minimum set cover

import math
from itertools import combinations


def min_set_cover(sc):
    """
    Returns the minimum number of subsets covering the universe, by increasing size.

    Args:
        sc (SetCoverInstance): set cover instance.

    Returns:
        (int | float): minimum cover size, `inf` when the subsets do not cover the universe.

    Example:
        ```python
        from dpsub.generators.setcover import SetCoverInstance
        from dpsub.oracle.setcover import min_set_cover
        min_set_cover(SetCoverInstance(2, ({1}, {2})))
        # 2
        ```
    """
    if not sc.covers(range(sc.m)):
        return math.inf
    for size in range(1, sc.m + 1):
        if any(sc.covers(indices) for indices in combinations(range(sc.m), size)):
            return size
    return math.inf
