"""Gromov-Witten and Hurwitz partition sums."""

from .hurwitz import HURWITZ_ENUMERATION_LIMIT, cycle_type, hurwitz_brute, hurwitz_count
from .queries import GW_DEGREE_LIMIT, GWQuery, HurwitzQuery
from .reduction import partition_sum
from .stationary import (
    GWSeries,
    connected_1pt,
    connected_1pt_factorized,
    connected_1pt_series,
    elliptic_series,
    gw_generating,
    gw_generating_value,
    gw_stationary,
    gw_stationary_target,
    vacuum_factor,
)

__all__ = [
    'GW_DEGREE_LIMIT',
    'HURWITZ_ENUMERATION_LIMIT',
    'GWQuery',
    'GWSeries',
    'HurwitzQuery',
    'connected_1pt',
    'connected_1pt_factorized',
    'connected_1pt_series',
    'cycle_type',
    'elliptic_series',
    'gw_generating',
    'gw_generating_value',
    'gw_stationary',
    'gw_stationary_target',
    'hurwitz_brute',
    'hurwitz_count',
    'partition_sum',
    'vacuum_factor',
]
