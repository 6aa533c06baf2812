"""Exact Hilbert-space dimension counting for partitioned quantum sites."""

from hilbertdim.bigcomb import binomial, integer_power
from hilbertdim.packing import (
    ElementSpec,
    InvalidElementError,
    Model,
    NonDivisorError,
    SystemPartition,
    bosonic_dim,
    capped_dim,
    element_dim,
    equipartition_dim,
    fermionic_dim,
    qudit_dim,
    spin_dim,
    system_dim,
)
from hilbertdim.optimizer import (
    InfeasibleError,
    MixedComposition,
    ParityError,
    RatioReport,
    SweepRow,
    SweepTable,
    best_equipartition,
    best_mixed_composition,
    best_particle_count,
    measurement_threshold,
    mixed_vs_pure_exponent,
    qutrit_qubit_ratio,
    sweep_series,
)
from hilbertdim.oracle import (
    DEFAULT_MAX_CONFIGS,
    EnumerationCapExceeded,
    count_bosonic_brute,
    count_by_generating_function,
    enumerate_occupancies,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_CONFIGS",
    "ElementSpec",
    "EnumerationCapExceeded",
    "InfeasibleError",
    "InvalidElementError",
    "MixedComposition",
    "Model",
    "NonDivisorError",
    "ParityError",
    "RatioReport",
    "SweepRow",
    "SweepTable",
    "SystemPartition",
    "best_equipartition",
    "best_mixed_composition",
    "best_particle_count",
    "binomial",
    "bosonic_dim",
    "capped_dim",
    "count_bosonic_brute",
    "count_by_generating_function",
    "element_dim",
    "enumerate_occupancies",
    "equipartition_dim",
    "fermionic_dim",
    "integer_power",
    "measurement_threshold",
    "mixed_vs_pure_exponent",
    "qudit_dim",
    "qutrit_qubit_ratio",
    "spin_dim",
    "sweep_series",
    "system_dim",
]
