"""Per-element dimension formulas for each occupancy model, and their lift
to whole systems of N sites.

An element groups ``x`` sites that share ``k`` particles with at most ``z``
particles per site. The system dimension is the product of the element
dimensions (all particles maximally entangled); sites not covered by any
element contribute a factor of one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from hilbertdim.bigcomb import BigDim, binomial, integer_power


class Model(str, Enum):
    """Occupancy model of an element."""

    QUDIT = "qudit"
    FERMIONIC = "fermionic"
    CAPPED = "capped"
    BOSONIC = "bosonic"
    SPIN = "spin"

    def __str__(self) -> str:
        return self.value


class InvalidElementError(ValueError):
    """An element violates the constraints of its occupancy model."""


class NonDivisorError(ValueError):
    """The element size does not divide the number of sites."""


@dataclass(frozen=True)
class ElementSpec:
    """One quantum element: ``x`` sites, ``k`` particles, at most ``z`` per site.

    The defaults describe a plain qudit (one particle, single occupancy).
    ``k > x * z`` is allowed; such an element simply has dimension 0.
    """

    x: int
    k: int = 1
    z: int = 1

    def __post_init__(self) -> None:
        if self.x < 1:
            raise InvalidElementError(f"element needs x >= 1 sites, got x={self.x}")
        if self.z < 1:
            raise InvalidElementError(f"element needs cap z >= 1, got z={self.z}")
        if self.k < 0:
            raise InvalidElementError(f"element needs k >= 0 particles, got k={self.k}")


@dataclass(frozen=True)
class SystemPartition:
    """Elements laid over a budget of ``n_total`` sites under a single model."""

    n_total: int
    elements: tuple[ElementSpec, ...] = field(default_factory=tuple)
    model: Model = Model.QUDIT

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "model", Model(self.model))
        if self.n_total < 1:
            raise InvalidElementError(f"partition needs n_total >= 1, got {self.n_total}")
        if self.used_sites > self.n_total:
            raise InvalidElementError(
                f"elements cover {self.used_sites} sites but only {self.n_total} exist"
            )

    @property
    def used_sites(self) -> int:
        return sum(e.x for e in self.elements)

    @property
    def unused_sites(self) -> int:
        return self.n_total - self.used_sites


def qudit_dim(x: int) -> BigDim:
    """A single particle spread over ``x`` sites has ``x`` states."""
    if x < 1:
        raise InvalidElementError(f"qudit needs x >= 1, got x={x}")
    return x


def fermionic_dim(x: int, k: int) -> BigDim:
    """Dimension of ``k`` particles on ``x`` singly-occupiable sites: C(x, k)."""
    ElementSpec(x, k, 1)
    return binomial(x, k)


def capped_dim(x: int, k: int, z: int) -> BigDim:
    """Count occupancy vectors of length ``x``, entries in ``0..z``, summing to ``k``.

    Evaluated as the nested sum over ``j_z, j_{z-1}, ..., j_2``, where
    ``j_r`` is the number of sites holding exactly ``r`` particles. Each
    level picks its ``j_r`` sites from those still free; the remaining
    particles go one per site on the rest. The memo table lives only for
    this call.
    """
    ElementSpec(x, k, z)
    if k > x * z:
        return 0

    @lru_cache(maxsize=None)
    def nested(r: int, sites: int, particles: int) -> int:
        if r == 1:
            return binomial(sites, particles)
        total = 0
        for j in range(min(sites, particles // r) + 1):
            total += binomial(sites, j) * nested(r - 1, sites - j, particles - r * j)
        return total

    return nested(z, x, k)


def bosonic_dim(x: int, k: int) -> BigDim:
    """Unbounded occupancy: C(x + k - 1, x - 1)."""
    if x < 1 or k < 0:
        raise InvalidElementError(f"bosonic element needs x >= 1, k >= 0; got x={x}, k={k}")
    return binomial(x + k - 1, x - 1)


def spin_dim(x: int, k: int) -> BigDim:
    """Fermions on ``x`` sites with a two-valued extra quantum number: C(2x, k)."""
    ElementSpec(x, k, 1)
    return binomial(2 * x, k)


def element_dim(model: Model | str, spec: ElementSpec) -> BigDim:
    """Dimension of one element under ``model``.

    Raises:
        InvalidElementError: if ``spec`` is not a legal element of ``model``.
            Qudits carry exactly one particle; fermionic and spin elements
            have ``z == 1``. Bosonic elements ignore ``z``.
    """
    model = Model(model)
    if model is Model.QUDIT:
        if spec.k != 1:
            raise InvalidElementError(f"qudit element holds exactly one particle, got k={spec.k}")
        return qudit_dim(spec.x)
    if model is Model.FERMIONIC:
        if spec.z != 1:
            raise InvalidElementError(f"fermionic element needs z = 1, got z={spec.z}")
        return fermionic_dim(spec.x, spec.k)
    if model is Model.CAPPED:
        return capped_dim(spec.x, spec.k, spec.z)
    if model is Model.BOSONIC:
        return bosonic_dim(spec.x, spec.k)
    if spec.z != 1:
        raise InvalidElementError(f"spin element needs z = 1 per spin state, got z={spec.z}")
    return spin_dim(spec.x, spec.k)


def system_dim(partition: SystemPartition) -> BigDim:
    """Product of element dimensions; uncovered sites contribute 1."""
    result = 1
    for spec in partition.elements:
        result *= element_dim(partition.model, spec)
    return result


def default_element(model: Model | str, x: int, k: int | None = None, z: int | None = None) -> ElementSpec:
    """Element of size ``x`` with the conventional particle count and cap.

    fermionic: k = x // 2 (lower of the particle/hole tie for odd x);
    capped: z = 2 and k = x; bosonic and spin: k = x; qudit: k = z = 1.
    """
    model = Model(model)
    if model is Model.QUDIT:
        return ElementSpec(x, 1 if k is None else k, 1 if z is None else z)
    if model is Model.FERMIONIC:
        return ElementSpec(x, x // 2 if k is None else k, 1 if z is None else z)
    if model is Model.CAPPED:
        return ElementSpec(x, x if k is None else k, 2 if z is None else z)
    return ElementSpec(x, x if k is None else k, 1 if z is None else z)


def equipartition_dim(
    n: int,
    x: int,
    model: Model | str = Model.QUDIT,
    k: int | None = None,
    z: int | None = None,
) -> BigDim:
    """Dimension of ``n`` sites split into ``n // x`` identical elements.

    Raises:
        NonDivisorError: if ``x`` does not divide ``n``.
    """
    if n < 1 or x < 1:
        raise InvalidElementError(f"equipartition needs n, x >= 1; got n={n}, x={x}")
    if n % x:
        raise NonDivisorError(f"element size x={x} does not divide n={n}")
    per_element = element_dim(model, default_element(model, x, k, z))
    return integer_power(per_element, n // x)
