# @author Augustin Mortier
# @desc dpsub - Utils

import math
from fractions import Fraction


def as_fraction(value):
    """
    Returns an exact rational for a given number.

    Floats are read through their decimal representation, so that `0.01` gives `1/100`.

    Args:
        - value (int, float, str, Fraction): number to be converted.

    Returns:
        (Fraction): exact value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Wrong coordinate type: a boolean is not a number.")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Coordinates must be finite, got {value}.")
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Wrong coordinate type: {type(value).__name__}.")


def fraction_to_pair(value):
    """
    Returns the (numerator, denominator) pair of a rational.

    Args:
        - value (Fraction): rational number.
    """
    value = as_fraction(value)
    return [value.numerator, value.denominator]


def pair_to_fraction(pair):
    """
    Returns a rational from a (numerator, denominator) pair.

    Args:
        - pair (list): two integers.
    """
    if len(pair) != 2:
        raise ValueError(f"A rational is written as [numerator, denominator], got {pair}.")
    num, den = pair
    if den == 0:
        raise ValueError("Denominator must not be zero.")
    return Fraction(int(num), int(den))


def is_power_of_two(k):
    """
    Returns True if k is a positive power of two.

    Args:
        - k (int): value to be checked.
    """
    return isinstance(k, int) and k >= 1 and (k & (k - 1)) == 0


def log2_int(k):
    """
    Returns gamma such that k = 2**gamma.

    Args:
        - k (int): power of two.
    """
    if not is_power_of_two(k):
        raise ValueError(f"k must be a power of two, got {k}.")
    return k.bit_length() - 1


def klogk(k):
    """
    Returns k*log2(k), or 0 for k < 2.

    Args:
        - k (int): number of terminals.
    """
    if k < 2:
        return 0.0
    return k * math.log2(k)
