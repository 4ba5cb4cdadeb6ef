"""ζ-regularized power sums of the particle coordinates and the E-eigenvalue."""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ...types import ArgumentError, PoleError
from .partition import HALF

# |1 − e^{−z}| below this is treated as the pole e^z = 1.
POLE_TOLERANCE = 1e-14


@lru_cache(maxsize=None)
def bernoulli(m):
    """Bernoulli number B_m (B_1 = −1/2) by the standard recurrence."""
    if m == 0:
        return Fraction(1)
    return -sum(comb(m + 1, j) * bernoulli(j) for j in range(m)) / (m + 1)


def zeta_negative(k):
    """ζ(−k) = −B_{k+1}/(k+1) for k ≥ 0."""
    if k < 0:
        raise ArgumentError(f"k must be nonnegative, got {k}")
    return -bernoulli(k + 1) / (k + 1)


def power_sum(k, partition):
    """
    Regularized power sum p_k(λ) = Σ_i [(λ_i−i+½)^k − (−i+½)^k] + (1−2^{−k}) ζ(−k).

    Args:
        k: Positive integer
        partition: The diagram

    Returns:
        Exact rational
    """
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    total = Fraction(0)
    for i, part in enumerate(partition, start=1):
        total += (part - i + HALF) ** k - (-i + HALF) ** k
    return total + (1 - Fraction(1, 2 ** k)) * zeta_negative(k)


def power_series_E(partition, z):
    """
    Eigenvalue of E(z) on v_λ: Σ_i e^{z(λ_i−i+½)} continued analytically.

    Finite head over the rows plus the geometric tail e^{−z(ℓ+½)}/(1−e^{−z}).

    Raises:
        PoleError: If e^z = 1
    """
    z = complex(z)
    denominator = 1 - cmath.exp(-z)
    if abs(denominator) < POLE_TOLERANCE:
        raise PoleError(f"E(z) has a pole at z = {z}")
    length = len(partition)
    head = sum(cmath.exp(z * (part - i + 0.5)) for i, part in enumerate(partition, start=1))
    return head + cmath.exp(-z * (length + 0.5)) / denominator


def e_coefficient(k, partition):
    """
    Coefficient of z^k in the Laurent expansion of the E-eigenvalue at z = 0.

    Equals 1 for k = −1, 0 for k = 0, and p_k(λ)/k! for k ≥ 1.
    """
    if k == -1:
        return Fraction(1)
    if k < 1:
        return Fraction(0)
    return power_sum(k, partition) / factorial(k)
