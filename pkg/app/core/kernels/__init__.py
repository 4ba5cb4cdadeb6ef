"""Correlation kernels of Schur-type measures."""

from .bessel import MAX_ORDER, BesselTable, bessel_j
from .correlations import (
    CORRELATION_LIMIT,
    GAP_LIMIT,
    TruncatedProbability,
    brute_force_correlation,
    correlation,
    gap_probability,
    kernel_for,
    lambda1_distribution,
)
from .kernel import NODE_CAP, bessel_series, contour_matrix, kernel_eval, kernel_matrix
from .specs import Bessel, MultiBand, SchurContour, Sine, lattice_index

__all__ = [
    'CORRELATION_LIMIT',
    'GAP_LIMIT',
    'MAX_ORDER',
    'NODE_CAP',
    'Bessel',
    'BesselTable',
    'MultiBand',
    'SchurContour',
    'Sine',
    'TruncatedProbability',
    'bessel_j',
    'bessel_series',
    'brute_force_correlation',
    'contour_matrix',
    'correlation',
    'gap_probability',
    'kernel_eval',
    'kernel_for',
    'kernel_matrix',
    'lambda1_distribution',
    'lattice_index',
]
