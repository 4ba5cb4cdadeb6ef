"""Measures on partitions and their samplers."""

from .sampling import (
    SAMPLE_LIMIT,
    longest_increasing_subsequence,
    make_rng,
    random_permutation,
    rsk_shape,
    rsk_tableau,
    sample_plancherel,
    sample_poissonized,
)
from .specs import Jack, PeriodicPlancherel, Plancherel, PoissonizedPlancherel, Schur
from .weights import (
    PartitionSum,
    energy_U,
    expected_size_schur,
    measure_table,
    partition_function,
    weight,
)

__all__ = [
    'SAMPLE_LIMIT',
    'Jack',
    'PartitionSum',
    'PeriodicPlancherel',
    'Plancherel',
    'PoissonizedPlancherel',
    'Schur',
    'energy_U',
    'expected_size_schur',
    'longest_increasing_subsequence',
    'make_rng',
    'measure_table',
    'partition_function',
    'random_permutation',
    'rsk_shape',
    'rsk_tableau',
    'sample_plancherel',
    'sample_poissonized',
    'weight',
]
