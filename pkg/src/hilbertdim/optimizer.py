"""Dimension-maximizing partitions and the qutrit-versus-qubit diagnostics.

Integer searches compare exact dimensions. The real-valued helpers
(ratios, thresholds, exponents) are double-precision diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from hilbertdim.bigcomb import BigDim
from hilbertdim.packing import (
    Model,
    capped_dim,
    default_element,
    equipartition_dim,
)

LN2 = math.log(2.0)
LN3 = math.log(3.0)
# ln(D3/D2) per site
QUTRIT_QUBIT_RATE = LN3 / 3.0 - LN2 / 2.0
# gain in ln D per qubit pair traded for a qutrit pair at fixed N'
M_CONST = LN3 - 1.5 * LN2

SWEEP_SERIES = (Model.QUDIT, Model.FERMIONIC, Model.CAPPED, Model.SPIN)


class InfeasibleError(ValueError):
    """No composition satisfies the site budget."""


class ParityError(ValueError):
    """``n_prime - 3 * y3`` is odd, so no whole number of qubits fits."""


@dataclass(frozen=True)
class MixedComposition:
    counts: dict[int, int]
    used_sites: int
    dim: BigDim

    @property
    def n_qutrits(self) -> int:
        return self.counts.get(3, 0)


@dataclass(frozen=True)
class RatioReport:
    n: float
    ratio: float
    m_const: float
    b_const: float


@dataclass(frozen=True)
class SweepRow:
    series: Model
    x: int
    k_used: int
    z_used: int
    dimension: BigDim


@dataclass
class SweepTable:
    n: int
    rows: list[SweepRow] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def series(self, name: Model | str) -> dict[int, BigDim]:
        """``{x: dimension}`` for one series."""
        name = Model(name)
        return {r.x: r.dimension for r in self.rows if r.series is name}


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def best_equipartition(n: int, model: Model | str = Model.QUDIT) -> tuple[int, BigDim]:
    """Divisor ``x`` of ``n`` maximizing the equipartition dimension.

    Ties go to the smaller ``x``. Only exact divisors are considered; slack
    sites are the business of :func:`best_mixed_composition`.
    """
    if n < 2:
        raise ValueError(f"best_equipartition needs n >= 2, got {n}")
    best_x, best_dim = 0, -1
    for x in divisors(n):
        d = equipartition_dim(n, x, model)
        if d > best_dim:
            best_x, best_dim = x, d
    return best_x, best_dim


def best_mixed_composition(
    n: int, allowed_sizes=frozenset({2, 3}), strict: bool = False
) -> MixedComposition:
    """Max-product multiset of qudit sizes using at most ``n`` sites.

    Dynamic program over the exact number of used sites. Among equal
    products, more used sites win, then more qutrits, then more of the
    larger sizes. With ``strict`` every site must be used.

    Raises:
        InfeasibleError: if no allowed size fits (or, when strict, no
            composition uses exactly ``n`` sites).
    """
    sizes = sorted(set(allowed_sizes), reverse=True)
    if n < 2:
        raise ValueError(f"best_mixed_composition needs n >= 2, got {n}")
    if not sizes or min(sizes) < 2:
        raise ValueError(f"allowed sizes must be non-empty and >= 2, got {sorted(sizes)}")
    if min(sizes) > n:
        raise InfeasibleError(f"no allowed size in {sorted(sizes)} fits in n={n} sites")

    # key: (dim, qutrits, counts by descending size); extending by one size
    # is strictly monotone in this lexicographic order, so the DP is exact
    best: list[tuple | None] = [None] * (n + 1)
    best[0] = (1, 0, tuple(0 for _ in sizes))
    for budget in range(1, n + 1):
        for idx, s in enumerate(sizes):
            prev = best[budget - s] if s <= budget else None
            if prev is None:
                continue
            counts = list(prev[2])
            counts[idx] += 1
            cand = (prev[0] * s, prev[1] + (s == 3), tuple(counts))
            if best[budget] is None or cand > best[budget]:
                best[budget] = cand

    budgets = [n] if strict else range(n, 0, -1)
    chosen, used = None, 0
    for b in budgets:
        cand = best[b]
        # budgets scanned from largest down, so ties keep the larger one
        if cand is not None and (chosen is None or cand[0] > chosen[0]):
            chosen, used = cand, b
    if chosen is None:
        raise InfeasibleError(f"no composition of sizes {sorted(sizes)} uses exactly {n} sites")
    counts = {s: c for s, c in zip(sizes, chosen[2]) if c}
    return MixedComposition(counts=counts, used_sites=used, dim=chosen[0])


def best_particle_count(x: int, z: int) -> tuple[int, BigDim]:
    """Particle number ``k`` in ``0..x*z`` maximizing ``capped_dim(x, k, z)``.

    The counts are symmetric about ``k = x*z/2``, so ties go to the ``k``
    nearest that centre, then to the smaller ``k``.
    """
    best_key, best_k, best_dim = None, 0, -1
    for k in range(x * z + 1):
        d = capped_dim(x, k, z)
        key = (d, -abs(2 * k - x * z), -k)
        if best_key is None or key > best_key:
            best_key, best_k, best_dim = key, k, d
    return best_k, best_dim


def qutrit_qubit_ratio(n: float) -> RatioReport:
    """D3/D2 for ``n`` sites, extended to real ``n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return RatioReport(
        n=n,
        ratio=math.exp(n * QUTRIT_QUBIT_RATE),
        m_const=M_CONST,
        b_const=(LN2 / 2.0 - 1.0 / math.e) * n,
    )


def measurement_threshold(target_ratio: float) -> float:
    """Site count above which D3/D2 exceeds ``target_ratio``."""
    if not target_ratio > 1.0:
        raise ValueError(f"target ratio must exceed 1, got {target_ratio}")
    return math.log(target_ratio) / QUTRIT_QUBIT_RATE


def mixed_vs_pure_exponent(n_prime: int, y3: int) -> float:
    """``ln(D / D_e)`` for ``y3`` qutrits plus qubits filling ``n_prime`` sites.

    ``D_e = exp(n_prime / e)`` is the bound from continuous qudit size.
    """
    if n_prime < 1 or y3 < 0 or 3 * y3 > n_prime:
        raise ValueError(f"need n_prime >= 1 and 0 <= 3*y3 <= n_prime; got {n_prime}, {y3}")
    if (n_prime - 3 * y3) % 2:
        raise ParityError(f"n_prime - 3*y3 = {n_prime - 3 * y3} is odd; no whole number of qubits")
    b = (LN2 / 2.0 - 1.0 / math.e) * n_prime
    return M_CONST * y3 + b


def sweep_points(n: int) -> list[int]:
    """Element sizes with at least two elements, plus the single-element case."""
    return [x for x in divisors(n) if x >= 2 and (n // x >= 2 or x == n)]


def sweep_series(n: int, series=SWEEP_SERIES) -> SweepTable:
    """Dimension of each equipartition of ``n`` sites, per occupancy model.

    Rows are ordered by series (in the given order) then by ``x``.
    """
    if n < 2:
        raise ValueError(f"sweep needs n >= 2, got {n}")
    table = SweepTable(n=n)
    points = sweep_points(n)
    for model in (Model(s) for s in series):
        for x in points:
            spec = default_element(model, x)
            dim = equipartition_dim(n, x, model, spec.k, spec.z)
            table.rows.append(SweepRow(model, x, spec.k, spec.z, dim))
    chosen = [Model(s) for s in series]
    odd = [x for x in points if x % 2]
    if Model.FERMIONIC in chosen and odd:
        table.metadata["fermionic_tie"] = (
            "odd x " + ",".join(map(str, odd)) + ": k=(x-1)/2 and k=(x+1)/2 tie; lower k used"
        )
    if Model.SPIN in chosen:
        table.metadata["spin_k"] = "k=x (not optimized per point)"
    return table
