"""Binomial coefficients with the zero-extension convention used throughout."""

from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b), defined as 0 whenever a < b, a < 0 or b < 0."""
    if a < 0 or b < 0 or a < b:
        return 0
    return comb(a, b)
