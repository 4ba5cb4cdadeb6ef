"""Truncated charge-zero Fock space and its operators."""

from .operators import (
    Alpha,
    E,
    ECoefficient,
    OperatorWord,
    ScalarExp,
    alpha_terms,
    apply_alpha,
    apply_E,
    apply_E_coefficient,
    apply_exp,
    apply_word,
    vacuum_expectation,
)
from .schur import (
    VectorMeasure,
    complete_homogeneous,
    jacobi_trudi,
    measure_from_vector,
    schur_function,
    schur_vector,
)
from .trace import trace_series, trace_weighted
from .vector import FockVector, basis_vector, inner, vacuum

__all__ = [
    'Alpha',
    'E',
    'ECoefficient',
    'FockVector',
    'OperatorWord',
    'ScalarExp',
    'VectorMeasure',
    'alpha_terms',
    'apply_E',
    'apply_E_coefficient',
    'apply_alpha',
    'apply_exp',
    'apply_word',
    'basis_vector',
    'complete_homogeneous',
    'inner',
    'jacobi_trudi',
    'measure_from_vector',
    'schur_function',
    'schur_vector',
    'trace_series',
    'trace_weighted',
    'vacuum',
    'vacuum_expectation',
]
