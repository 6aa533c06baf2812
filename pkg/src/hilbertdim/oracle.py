"""Brute-force ground truth for the counting formulas.

Two structurally different routes: explicit enumeration of occupancy
vectors, and coefficient extraction from ``(1 + t + ... + t^z)^x``. Neither
touches the formulas in :mod:`hilbertdim.packing`.
"""

from __future__ import annotations

import math
from typing import Iterator

from hilbertdim.bigcomb import BigDim

OccupancyVector = tuple[int, ...]

DEFAULT_MAX_CONFIGS = 10**7


class EnumerationCapExceeded(RuntimeError):
    """Enumeration would materialize more vectors than the configured cap."""

    def __init__(self, projected: int, cap: int) -> None:
        super().__init__(f"enumeration would produce up to {projected} configurations (cap {cap})")
        self.projected = projected
        self.cap = cap


def _check_args(x: int, k: int, z: int) -> None:
    if x < 1 or z < 1 or k < 0:
        raise ValueError(f"need x >= 1, z >= 1, k >= 0; got x={x}, k={k}, z={z}")


def projected_count(x: int, k: int, z: int) -> int:
    """Upper bound on the number of vectors; ignores the cap when it is cheaper."""
    return min((z + 1) ** x, math.comb(x + k - 1, k))


def _occupancies(x: int, k: int, z: int) -> Iterator[OccupancyVector]:
    if x == 1:
        if k <= z:
            yield (k,)
        return
    # leave exactly enough room for the tail: k - v <= (x - 1) * z
    low = max(0, k - (x - 1) * z)
    for v in range(low, min(z, k) + 1):
        for tail in _occupancies(x - 1, k - v, z):
            yield (v,) + tail


def enumerate_occupancies(
    x: int, k: int, z: int, max_configs: int = DEFAULT_MAX_CONFIGS
) -> list[OccupancyVector]:
    """All length-``x`` vectors with entries in ``0..z`` summing to ``k``.

    Output is in strictly increasing lexicographic order.

    Raises:
        EnumerationCapExceeded: if the projected count exceeds ``max_configs``.
    """
    _check_args(x, k, z)
    projected = projected_count(x, k, z)
    if projected > max_configs:
        raise EnumerationCapExceeded(projected, max_configs)
    return list(_occupancies(x, k, z))


def count_by_generating_function(x: int, k: int, z: int) -> BigDim:
    """Coefficient of ``t**k`` in ``(1 + t + ... + t**z)**x``.

    The polynomial is built by ``x`` exact convolutions, truncated at degree ``k``.
    """
    _check_args(x, k, z)
    factor = [1] * (min(z, k) + 1)
    poly = [1] + [0] * k
    for _ in range(x):
        out = [0] * (k + 1)
        for i, a in enumerate(poly):
            if a == 0:
                continue
            for j, b in enumerate(factor):
                if i + j > k:
                    break
                out[i + j] += a * b
        poly = out
    return poly[k]


def count_bosonic_brute(x: int, k: int, max_configs: int = DEFAULT_MAX_CONFIGS) -> BigDim:
    """Number of ways to place ``k`` bosons on ``x`` sites, by enumeration."""
    return len(enumerate_occupancies(x, k, max(k, 1), max_configs))
