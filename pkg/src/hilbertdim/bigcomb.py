"""Exact combinatorial primitives on Python integers."""

from __future__ import annotations

# Dimensions are plain non-negative Python ints (arbitrary precision).
BigDim = int


def binomial(n: int, m: int) -> BigDim:
    """Return the binomial coefficient C(n, m).

    Uses the multiplicative running product; every intermediate division
    is exact, so no factorials are ever formed.

    Args:
        n: Size of the ground set, must be non-negative.
        m: Number of chosen elements. Values outside ``[0, n]`` give 0.

    Returns:
        The exact coefficient.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if m < 0 or m > n:
        return 0
    m = min(m, n - m)
    result = 1
    for i in range(1, m + 1):
        # result == C(n - m + i - 1, i - 1) here, so the division is exact
        result = result * (n - m + i) // i
    return result


def integer_power(base: int, exp: int) -> BigDim:
    """Exact ``base ** exp`` for non-negative integers; 0**0 is rejected."""
    if base < 0 or exp < 0:
        raise ValueError(f"integer_power requires non-negative inputs, got {base}, {exp}")
    if base == 0 and exp == 0:
        raise ValueError("integer_power(0, 0) is undefined")
    return base**exp
