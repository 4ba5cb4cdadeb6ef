"""Weights, normalizations and expectations of the measures."""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.stats import poisson

from ...types import ArgumentError, DomainError, InvariantViolation
from ..fock import schur_vector
from ..partitions import (
    arms_and_legs,
    dimension,
    enumerate_partitions,
    partitions_up_to,
)
from .specs import Jack, PeriodicPlancherel, Plancherel, PoissonizedPlancherel, Schur

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionSum:
    """
    A normalizing sum and a bound on what its truncation left out.

    Attributes:
        value: The (possibly truncated) sum
        tail_bound: Upper bound on the omitted part, 0 when exact
    """
    value: object
    tail_bound: float = 0.0


def _is_exact(value):
    return isinstance(value, (int, Fraction))


def _plancherel_factor(partition):
    """(dim λ/|λ|!)²."""
    return Fraction(dimension(partition), math.factorial(partition.size)) ** 2


def _log_plancherel_factor(partition):
    return 2 * (math.log(dimension(partition)) - math.lgamma(partition.size + 1))


def _require_size(partition, size, name):
    if partition.size != size:
        raise ArgumentError(f"{name} lives on partitions of {size}, got |λ| = {partition.size}")


def _plancherel(spec, partition, normalized):
    _require_size(partition, spec.n, 'Plancherel')
    return Fraction(dimension(partition) ** 2, math.factorial(spec.n))


def _poissonized(spec, partition, normalized):
    n = partition.size
    if not normalized:
        return spec.xi ** n * _plancherel_factor(partition)
    return math.exp(-spec.xi + n * math.log(spec.xi) + _log_plancherel_factor(partition))


def _schur(spec, partition, normalized):
    size = partition.size
    product = (schur_vector(spec.t, size)[partition]
               * schur_vector(spec.tbar, size)[partition])
    if not normalized:
        return product
    return product / partition_function(spec).value


def _jack(spec, partition, normalized):
    _require_size(partition, spec.d, 'the Jack measure')
    value = Fraction(1) if _is_exact(spec.eps1) and _is_exact(spec.eps2) else 1.0
    for arm, leg in arms_and_legs(partition):
        denominator = (((1 + arm) * spec.eps1 + leg * spec.eps2)
                       * (arm * spec.eps1 + (1 + leg) * spec.eps2))
        if denominator == 0:
            raise DomainError(f"the Jack weight of {partition.parts} has a pole at "
                              f"ε1 = {spec.eps1}, ε2 = {spec.eps2}")
        value /= denominator
    if normalized:
        value *= math.factorial(spec.d) * (spec.eps1 * spec.eps2) ** spec.d
    return value


def _periodic(spec, partition, normalized):
    energy = energy_U(spec.u, partition)
    n = partition.size
    if energy == 0 and _is_exact(spec.xi):
        return spec.xi ** n * _plancherel_factor(partition)
    exponent = (n * math.log(spec.xi) + float(energy) / float(spec.hbar)
                + _log_plancherel_factor(partition))
    return math.exp(exponent)


_WEIGHTS = {
    Plancherel: _plancherel,
    PoissonizedPlancherel: _poissonized,
    Schur: _schur,
    Jack: _jack,
    PeriodicPlancherel: _periodic,
}


def weight(spec, partition, normalized=None):
    """
    Weight of a partition under a measure.

    By default Plancherel, poissonized Plancherel and Schur weights are
    normalized while Jack and periodic weights are the raw products, which
    partition_function normalizes. normalized=False gives the unnormalized
    form of every measure (exact whenever the parameters are);
    normalized=True also normalizes Jack weights.

    Args:
        spec: One of the measure dataclasses
        partition: The partition
        normalized: None for the conventional form, or force either form

    Raises:
        ArgumentError: If the partition has the wrong size
    """
    handler = _WEIGHTS.get(type(spec))
    if handler is None:
        raise ArgumentError(f"unknown measure: {spec!r}")
    if normalized is None:
        normalized = not isinstance(spec, (Jack, PeriodicPlancherel))
    if normalized and isinstance(spec, PeriodicPlancherel):
        raise ArgumentError("periodic weights are normalized through partition_function")
    return handler(spec, partition, normalized)


def _schur_exponent(spec):
    return sum(k * a * b for k, (a, b) in enumerate(zip(spec.t, spec.tbar), start=1))


def _periodic_tail(spec, truncation):
    """
    Bound Σ_{|λ| > truncation} of the periodic weights.

    Each added box changes U by at most max u − min u, so the weights of
    partitions of n sum to at most ξ'^n/n! with ξ' = ξ e^{(max u − min u)/ħ}.
    """
    spread = float(max(spec.u) - min(spec.u))
    effective = float(spec.xi) * math.exp(spread / float(spec.hbar))
    return math.exp(effective) * float(poisson.sf(truncation, effective))


def partition_function(spec, truncation=None):
    """
    Normalizing sum of a measure.

    Args:
        spec: Measure parameters
        truncation: Largest |λ| summed for the periodic measure

    Returns:
        PartitionSum

    Raises:
        DomainError: If the Schur data do not give a finite sum
        InvariantViolation: If the Jack sum disagrees with 1/(d!(ε1ε2)^d)
    """
    if isinstance(spec, (Plancherel, PoissonizedPlancherel)):
        return PartitionSum(Fraction(1))
    if isinstance(spec, Schur):
        exponent = _schur_exponent(spec)
        if not cmath.isfinite(complex(exponent)):
            raise DomainError(f"Schur data give a divergent normalization: {exponent}")
        try:
            value = cmath.exp(exponent) if isinstance(exponent, complex) else math.exp(exponent)
        except OverflowError:
            raise DomainError(f"Schur normalization exp({exponent}) overflows") from None
        return PartitionSum(value)
    if isinstance(spec, Jack):
        total = sum(weight(spec, p, normalized=False) for p in enumerate_partitions(spec.d))
        expected = Fraction(1) / (math.factorial(spec.d) * (spec.eps1 * spec.eps2) ** spec.d)
        if _is_exact(total) and total != expected:
            raise InvariantViolation(f"Jack normalization {total} differs from {expected}")
        if not _is_exact(total) and not math.isclose(total, expected, rel_tol=1e-9):
            raise InvariantViolation(f"Jack normalization {total} differs from {expected}")
        return PartitionSum(total)
    if isinstance(spec, PeriodicPlancherel):
        if truncation is None or truncation < 0:
            raise ArgumentError("the periodic partition function needs a truncation ≥ 0")
        total = sum(weight(spec, p) for p in partitions_up_to(truncation))
        tail = _periodic_tail(spec, truncation)
        logger.debug("periodic partition function %s up to |λ| = %d, tail ≤ %g",
                     total, truncation, tail)
        return PartitionSum(total, tail)
    raise ArgumentError(f"unknown measure: {spec!r}")


def expected_size_schur(t, tbar):
    """⟨|λ|⟩ = Σ k² t_k t̄_k under the Schur measure."""
    return sum(k * k * a * b for k, (a, b) in enumerate(zip(t, tbar), start=1))


def energy_U(u, partition, cutoff=None):
    """
    Energy Σ_{x ∈ 𝔖(λ), x > −MN} u(x mod N) of the particle configuration.

    Residues x mod N are taken in {1/2, …, N − 1/2}; u[k] is the value at
    k + 1/2. The cutoff M is raised until −MN lies below every hole, and
    the result does not depend on it.

    Args:
        u: Potential values, summing to zero
        partition: The partition
        cutoff: Requested M (optional)

    Returns:
        Exact rational for rational u
    """
    period = len(u)
    smallest = -(-(len(partition) + 1) // period)
    cutoff = smallest if cutoff is None else max(cutoff, smallest)

    def total(m):
        positions = partition.positions(m * period)
        return sum(u[y % period] for y in positions)

    value = total(cutoff)
    assert value == total(cutoff + 1)
    return value


def measure_table(spec, truncation=None):
    """
    Weights of every partition the measure lives on.

    Plancherel and Jack list the partitions of n (resp. d); the other
    measures list all partitions with |λ| ≤ truncation.

    Returns:
        List of (Partition, weight) in enumeration order
    """
    if isinstance(spec, Plancherel):
        return [(p, weight(spec, p)) for p in enumerate_partitions(spec.n)]
    if isinstance(spec, Jack):
        return [(p, weight(spec, p)) for p in enumerate_partitions(spec.d)]
    if truncation is None or truncation < 0:
        raise ArgumentError(f"{type(spec).__name__} tables need a truncation ≥ 0")
    if isinstance(spec, Schur):
        left, right = schur_vector(spec.t, truncation), schur_vector(spec.tbar, truncation)
        normalization = partition_function(spec).value
        return [(p, left[p] * right[p] / normalization) for p in partitions_up_to(truncation)]
    return [(p, weight(spec, p)) for p in partitions_up_to(truncation)]
