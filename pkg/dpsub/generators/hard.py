# @author Augustin Mortier
# @desc dpsub - Lower-bound instance for +1 distance-approximating subgraphs

from fractions import Fraction

from dpsub.instance import build_instance
from dpsub.utils import as_fraction


def gen_hard(k, epsilon=Fraction(1, 100)):
    """
    Builds the chain instance on which every +1 distance-approximating subgraph needs about k branching vertices.

    Non-terminals `v{i} = [i-ε, i+1+ε]` for 1 ≤ i ≤ 2k-2 form a chain where consecutive intervals overlap by 2ε;
    terminal `t{j} = [2j-1.5, 2j-0.5]`, for 1 ≤ j ≤ k, meets the chain at `v{2j-2}` and `v{2j-1}` when they exist.

    Args:
        k (int): number of terminals, at least 2.
        epsilon (Fraction, optional): overlap half-width, in (0, 1/4).

    Returns:
        (Instance): instance with (2k-2) + k vertices.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.hard.gen_hard(3)
        G.n, G.k
        # (7, 3)
        ```
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}.")
    epsilon = as_fraction(epsilon)
    if not 0 < epsilon < Fraction(1, 4):
        raise ValueError(f"epsilon must lie in (0, 1/4), got {epsilon}.")
    half = Fraction(1, 2)
    intervals, flags, labels = [], [], []
    for i in range(1, 2 * k - 1):
        intervals.append((i - epsilon, i + 1 + epsilon))
        flags.append(False)
        labels.append(f"v{i}")
    for j in range(1, k + 1):
        intervals.append((2 * j - 1 - half, 2 * j - half))
        flags.append(True)
        labels.append(f"t{j}")
    meta = {"generator": "hard", "k": k, "epsilon": str(epsilon)}
    return build_instance(intervals, flags, labels=labels, meta=meta)
