"""Exact combinatorics of partitions."""

from .characters import central_character, character, remove_strips
from .hooks import (
    arms_and_legs,
    count_growth_paths,
    dimension,
    dimension_frobenius,
    dimension_ratio,
    hook_arm_leg,
    hook_lengths,
)
from .partition import (
    ENUMERATION_LIMIT,
    HALF,
    CycleType,
    ParticleSet,
    Partition,
    contents,
    enumerate_partitions,
    format_partition,
    from_particles,
    from_positions,
    grow,
    parse_partition,
    particles,
    partition_count,
    partitions_up_to,
    shrink,
    transpose,
)
from .power_sums import bernoulli, e_coefficient, power_series_E, power_sum, zeta_negative
from .profile import Profile, profile

__all__ = [
    'ENUMERATION_LIMIT',
    'HALF',
    'CycleType',
    'ParticleSet',
    'Partition',
    'Profile',
    'arms_and_legs',
    'bernoulli',
    'central_character',
    'character',
    'contents',
    'count_growth_paths',
    'dimension',
    'dimension_frobenius',
    'dimension_ratio',
    'e_coefficient',
    'enumerate_partitions',
    'format_partition',
    'from_particles',
    'from_positions',
    'grow',
    'hook_arm_leg',
    'hook_lengths',
    'parse_partition',
    'particles',
    'partition_count',
    'partitions_up_to',
    'power_series_E',
    'power_sum',
    'profile',
    'remove_strips',
    'shrink',
    'transpose',
    'zeta_negative',
]
