# @author Augustin Mortier
# @desc dpsub - Fixed-width bit strings, bit reversal and hypercube edges

from dataclasses import dataclass
from itertools import combinations

from dpsub.utils import log2_int


@dataclass(frozen=True, order=True)
class BitString:
    """
    Fixed-width binary word. Bits are indexed from the left: `bit(1)` is the most significant bit.

    Example:
        ```python
        from dpsub.generators.bits import BitString
        x = BitString.from_str("01001")
        x.value, x.bit(2)
        # (9, 1)
        ```
    """

    value: int
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise ValueError(f"Width must be non-negative, got {self.width}.")
        if not 0 <= self.value < 2**self.width:
            raise ValueError(f"{self.value} does not fit in {self.width} bits.")

    @classmethod
    def from_str(cls, bits):
        if any(c not in "01" for c in bits):
            raise ValueError(f"Not a bit string: {bits!r}.")
        return cls(int(bits, 2) if bits else 0, len(bits))

    def bit(self, i):
        if not 1 <= i <= self.width:
            raise ValueError(f"Bit index {i} out of range [1, {self.width}].")
        return (self.value >> (self.width - i)) & 1

    def substring(self, i, j):
        """Bits i..j (inclusive), as a string."""
        if not 1 <= i <= j <= self.width:
            raise ValueError(f"Invalid bit range [{i}, {j}] for width {self.width}.")
        return str(self)[i - 1 : j]

    def hamming(self, other):
        if self.width != other.width:
            raise ValueError(f"Width mismatch: {self.width} and {other.width}.")
        return bin(self.value ^ other.value).count("1")

    def __str__(self):
        return format(self.value, f"0{self.width}b") if self.width else ""


def rev(gamma, x):
    """
    Returns the bit string obtained by writing the bits of x in reverse.

    Args:
        gamma (int): word width.
        x (BitString): word of width gamma.

    Returns:
        (BitString): reversed word.

    Example:
        ```python
        from dpsub.generators.bits import BitString, rev
        str(rev(5, BitString.from_str("00010")))
        # '01000'
        ```
    """
    if x.width != gamma:
        raise ValueError(f"Expected a word of width {gamma}, got width {x.width}.")
    return BitString.from_str(str(x)[::-1])


def rev_int(gamma, i):
    """Bit reversal of an integer in [0, 2**gamma)."""
    return rev(gamma, BitString(i, gamma)).value


def lca_triple(x, y):
    """
    Returns the lowest common ancestor of two distinct words in the binary tree of words, with its floor and its ceiling.

    If l is the first position where x and y differ, lca is the prefix of length l-1,
    floor is `lca 0 1...1` and ceiling is `lca 1 0...0`, both of the width of x.

    Args:
        x (BitString): first word.
        y (BitString): second word, distinct from x and of the same width.

    Returns:
        (tuple): (lca as a string, floor, ceiling).
    """
    if x.width != y.width:
        raise ValueError(f"Width mismatch: {x.width} and {y.width}.")
    if x == y:
        raise ValueError(f"lca_triple needs distinct words, got {x} twice.")
    gamma = x.width
    first = next(i for i in range(1, gamma + 1) if x.bit(i) != y.bit(i))
    prefix = str(x)[: first - 1]
    floor = BitString.from_str(prefix + "0" + "1" * (gamma - first))
    ceil = BitString.from_str(prefix + "1" + "0" * (gamma - first))
    return prefix, floor, ceil


def hypercube_edges(gamma):
    """
    Returns the hypercube edges on words of width gamma: pairs (x, x') with x < x' at Hamming distance one.

    Args:
        gamma (int): word width, at least 1.

    Returns:
        (list): (BitString, BitString) pairs, in increasing order.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be at least 1, got {gamma}.")
    edges = []
    for x in range(2**gamma):
        for b in range(gamma):
            y = x | (1 << b)
            if y != x:
                edges.append((BitString(x, gamma), BitString(y, gamma)))
    return sorted(edges)


def friends(k):
    """
    Returns the friend pairs (i, j) of the k middle terminals: i < j whose binary words differ in exactly one bit.

    Args:
        k (int): power of two.
    """
    gamma = log2_int(k)
    if gamma == 0:
        return []
    return [(x.value, y.value) for x, y in hypercube_edges(gamma)]


def _rev_range(gamma, edge):
    x, y = edge
    return rev(gamma, x).value, rev(gamma, y).value


def _disjoint(first, second):
    return first[1] < second[0] or second[1] < first[0]


def reversed_range_overlaps(gamma):
    """
    Scans every pair of distinct hypercube edges for the two disjointness statements on reversed ranges.

    (a) edges with the same lca have disjoint ranges `[rev(x), rev(x')]`;
    (b) edges whose two floors both lie in `[x, x') ∩ [y, y')` have disjoint ranges.

    Args:
        gamma (int): word width.

    Returns:
        (dict): `{"a": [...], "b": [...]}` lists of offending edge pairs.
    """
    edges = hypercube_edges(gamma)
    triples = {edge: lca_triple(*edge) for edge in edges}
    ranges = {edge: _rev_range(gamma, edge) for edge in edges}
    found = {"a": [], "b": []}
    for first, second in combinations(edges, 2):
        if _disjoint(ranges[first], ranges[second]):
            continue
        lca_first, floor_first, _ = triples[first]
        lca_second, floor_second, _ = triples[second]
        if lca_first == lca_second:
            found["a"].append((first, second))
        low = max(first[0].value, second[0].value)
        high = min(first[1].value, second[1].value)
        if all(low <= floor.value < high for floor in (floor_first, floor_second)):
            found["b"].append((first, second))
    return found
