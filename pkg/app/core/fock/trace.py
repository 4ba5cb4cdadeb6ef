"""Weighted traces over the charge-zero sector."""

from ...types import ArgumentError
from ..partitions import enumerate_partitions
from .operators import apply_E
from .vector import basis_vector


def trace_series(insertions, max_energy):
    """
    Coefficients of tr q^{L_0} ∏ E(z_i) up to q^{max_energy}.

    Args:
        insertions: Arguments z_i of the inserted E-operators
        max_energy: Highest power of q kept

    Returns:
        List whose entry d is Σ_{|λ|=d} ∏ eigenvalues on v_λ
    """
    if max_energy < 0:
        raise ArgumentError(f"E_max must be nonnegative, got {max_energy}")
    coefficients = []
    for degree in range(max_energy + 1):
        total = 0
        for partition in enumerate_partitions(degree):
            vector = basis_vector(partition, max_energy)
            for z in insertions:
                vector = apply_E(z, vector)
            total += vector[partition]
        coefficients.append(total)
    return coefficients


def trace_weighted(q, insertions, max_energy):
    """
    tr q^{L_0} ∏ E(z_i), truncated at energy max_energy.

    Args:
        q: Numeric weight with |q| < 1, or None for the formal series
        insertions: Arguments z_i of the inserted E-operators
        max_energy: Truncation energy

    Returns:
        The list of q-coefficients when q is None, otherwise their sum

    Raises:
        ArgumentError: If |q| ≥ 1
        PoleError: If some e^{z_i} = 1
    """
    coefficients = trace_series(insertions, max_energy)
    if q is None:
        return coefficients
    if not abs(q) < 1:
        raise ArgumentError(f"the trace needs |q| < 1, got {q}")
    return sum(c * q ** d for d, c in enumerate(coefficients))
