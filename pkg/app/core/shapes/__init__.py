"""Limit shapes: Ω, the hook functional, periodic-potential maximizers and bands."""

from .bands import (
    BandGapStructure,
    bands_at_level,
    critical_values,
    g_of_phi,
    limit_density,
    limit_kernel,
)
from .discrete import DiscreteProfile, uniform_edges
from .energy import (
    REFINEMENT_TOLERANCE,
    SurfaceTension,
    action_value,
    hook_energy,
    log_matrix,
    surface_tension,
)
from .maximize import default_half_width, maximize_action
from .seiberg_witten import (
    PERIOD_CONSTANT,
    Calibration,
    PeriodMatch,
    SWCurveData,
    calibrate_period_constant,
    chebyshev_curve,
    facets,
    match_periods,
    maximizer_from_map,
    real_axis_phi,
    sw_map,
    sw_periods,
)
from .vkls import diagram_profile_distance, vkls_discrete, vkls_height, vkls_profile

__all__ = [
    'PERIOD_CONSTANT',
    'REFINEMENT_TOLERANCE',
    'BandGapStructure',
    'Calibration',
    'DiscreteProfile',
    'PeriodMatch',
    'SWCurveData',
    'SurfaceTension',
    'action_value',
    'bands_at_level',
    'calibrate_period_constant',
    'chebyshev_curve',
    'critical_values',
    'default_half_width',
    'diagram_profile_distance',
    'facets',
    'g_of_phi',
    'hook_energy',
    'limit_density',
    'limit_kernel',
    'log_matrix',
    'match_periods',
    'maximize_action',
    'maximizer_from_map',
    'real_axis_phi',
    'surface_tension',
    'sw_map',
    'sw_periods',
    'uniform_edges',
    'vkls_discrete',
    'vkls_height',
    'vkls_profile',
]
