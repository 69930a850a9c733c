# @author Augustin Mortier
# @desc dpsub - Seeded random interval instances

from fractions import Fraction

import numpy as np

from dpsub.instance import UnitPointInstance, build_instance

FLAVORS = ("general", "unit_point")

# grid resolution of the general flavor (coordinates are multiples of 1/GRID)
GRID = 8


def gen_random(n, k, seed=0, flavor="general"):
    """
    Generates a random instance with n vertices, k of them terminals, whose terminals are pairwise connected.

    - `general`: intervals with distinct endpoints on a 1/8 grid and lengths in [1/2, 2); gaps in the union are bridged
      by stretching the interval reaching farthest to the right just past the next left endpoint.
    - `unit_point`: a chain of n-k unit non-terminals with distinct endpoints and k point terminals sampled inside
      their union. With n = k every terminal sits at 0.

    Args:
        n (int): number of vertices.
        k (int): number of terminals, 1 ≤ k ≤ n.
        seed (int, optional): seed of the numpy generator.
        flavor (str, optional): `general` or `unit_point`.

    Returns:
        (Instance): instance (UnitPointInstance for the `unit_point` flavor); `meta` records the generator arguments.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.random.gen_random(20, 4, seed=7)
        G.n, G.k
        # (20, 4)
        ```
    """
    if flavor not in FLAVORS:
        raise ValueError(f"Unknown flavor {flavor!r}, expected one of {FLAVORS}.")
    if not 1 <= k <= n:
        raise ValueError(f"Expected 1 ≤ k ≤ n, got n={n}, k={k}.")
    rng = np.random.default_rng(seed)
    meta = {"generator": "random", "n": n, "k": k, "seed": seed, "flavor": flavor}
    if flavor == "general":
        intervals = _general_intervals(rng, n)
        flags = [False] * n
        for t in rng.choice(n, size=k, replace=False):
            flags[int(t)] = True
        return build_instance(intervals, flags, meta=meta)
    intervals = _unit_point_intervals(rng, n, k)
    flags = [False] * (n - k) + [True] * k
    return UnitPointInstance(intervals, flags, meta=meta)


def _general_intervals(rng, n):
    lefts = sorted(int(x) for x in rng.choice(n * GRID, size=n, replace=False))
    used = set(lefts)
    rights = []
    for left in lefts:
        right = left + int(rng.integers(GRID // 2, 2 * GRID))
        while right in used:
            right = left + int(rng.integers(GRID // 2, 2 * GRID))
        used.add(right)
        rights.append(Fraction(right, GRID))
    lefts = [Fraction(left, GRID) for left in lefts]

    # bridge the gaps of the union
    reach = 0
    for i in range(1, n):
        if rights[i - 1] > rights[reach]:
            reach = i - 1
        if lefts[i] > rights[reach]:
            rights[reach] = lefts[i] + Fraction(1, 2 * GRID)
    return list(zip(lefts, rights))


def _unit_point_intervals(rng, n, k):
    m = n - k
    if m == 0:
        return [(0, 0)] * k
    unit = GRID * max(1, k)
    starts = [0]
    taken = {0}
    for _ in range(1, m):
        allowed = [step for step in range(1, unit) if starts[-1] + step - unit not in taken]
        # all steps blocked only when the last `unit` starts are consecutive; endpoints may then tie
        step = int(rng.choice(allowed)) if allowed else unit - 1
        starts.append(starts[-1] + step)
        taken.add(starts[-1])
    slots = rng.choice(starts[-1] + unit, size=k, replace=False)
    intervals = [(Fraction(s, unit), Fraction(s + unit, unit)) for s in starts]
    intervals += [(Fraction(2 * int(v) + 1, 2 * unit),) * 2 for v in sorted(slots)]
    return intervals
