"""Determinantal correlations, gap probabilities and the enumeration oracle."""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.stats import poisson

from ...types import ArgumentError, InvariantViolation, NumericError, ResourceError
from ..measures import PoissonizedPlancherel, Schur, measure_table
from .kernel import kernel_matrix
from .specs import Bessel, SchurContour, lattice_index

logger = logging.getLogger(__name__)

# Largest point set for a direct correlation determinant.
CORRELATION_LIMIT = 12

# Largest set for a gap determinant.
GAP_LIMIT = 400

# Determinants this far outside [0, 1] are clamped; further out is an error.
CLAMP_TOLERANCE = 1e-10

# Diagonal kernel values below this end a gap window.
NEGLIGIBLE_DENSITY = 1e-16


@dataclass(frozen=True)
class TruncatedProbability:
    """
    A probability computed from a truncated sum.

    Attributes:
        value: Sum over |λ| ≤ E_max
        tail_bound: Upper bound on the probability of |λ| > E_max
    """
    value: float
    tail_bound: float


def _checked_probability(value, what):
    if -CLAMP_TOLERANCE <= value < 0 or 1 < value <= 1 + CLAMP_TOLERANCE:
        logger.debug("%s %.3g clamped to [0, 1]", what, value)
        return min(max(value, 0.0), 1.0)
    if not 0 <= value <= 1:
        raise InvariantViolation(f"{what} {value} lies outside [0, 1]")
    return value


def _distinct(points):
    indices = [lattice_index(x) for x in points]
    if len(set(indices)) != len(indices):
        raise ArgumentError("points must be distinct")
    return indices


def correlation(kernel, points):
    """
    ρ(X) = det[K(x_i, x_j)].

    Args:
        kernel: Kernel specification
        points: Distinct half-integers, at most CORRELATION_LIMIT of them

    Raises:
        InvariantViolation: If the determinant lies far outside [0, 1]
    """
    points = list(points)
    _distinct(points)
    if len(points) > CORRELATION_LIMIT:
        raise ResourceError(f"{len(points)} points exceed the correlation limit {CORRELATION_LIMIT}")
    if not points:
        return 1.0
    value = float(np.real(np.linalg.det(kernel_matrix(kernel, points))))
    return _checked_probability(value, 'correlation')


def gap_probability(kernel, points):
    """
    Probability that no particle lies in a finite set: det(I − K_B).

    Raises:
        ResourceError: If the set exceeds GAP_LIMIT points
    """
    points = list(points)
    _distinct(points)
    if len(points) > GAP_LIMIT:
        raise ResourceError(f"{len(points)} points exceed the gap limit {GAP_LIMIT}")
    if not points:
        return 1.0
    matrix = np.eye(len(points)) - kernel_matrix(kernel, points)
    value = float(np.real(np.linalg.det(matrix)))
    return _checked_probability(value, 'gap probability')


def _gap_window(kernel, start):
    """Half-integers from start up to where K(x, x) is negligible."""
    points = []
    x = start
    while len(points) < GAP_LIMIT:
        points.append(x)
        if kernel_matrix(kernel, [x])[0, 0] < NEGLIGIBLE_DENSITY:
            return points
        x += 1
    raise NumericError("density did not become negligible within the gap limit",
                       {'start': start, 'points': len(points)})


def lambda1_distribution(xi, h_max):
    """
    Prob{λ_1 ≤ h} for h = 0..h_max under the poissonized Plancherel measure.

    Computed as the probability of no particle in {h + 1/2, h + 3/2, …}.
    """
    if h_max < 0:
        raise ArgumentError(f"h_max must be nonnegative, got {h_max}")
    kernel = Bessel(xi)
    result = []
    for h in range(h_max + 1):
        window = _gap_window(kernel, h + 0.5)
        result.append(gap_probability(kernel, window))
    return result


def kernel_for(spec):
    """The correlation kernel of a poissonized Plancherel or Schur measure."""
    if isinstance(spec, PoissonizedPlancherel):
        return Bessel(float(spec.xi))
    if isinstance(spec, Schur):
        return SchurContour(spec.t, spec.tbar)
    raise ArgumentError(f"no correlation kernel for {spec!r}")


def _tail_bound(spec, max_energy):
    if isinstance(spec, PoissonizedPlancherel):
        return float(poisson.sf(max_energy, float(spec.xi)))
    pairs = [(k, complex(a * b).real) for k, (a, b) in enumerate(zip(spec.t, spec.tbar), start=1)]

    def log_bound(r):
        # Chernoff: Prob{|λ| > E} ≤ E[r^{|λ|}] r^{−E−1} with E[r^{|λ|}] = Z(r)/Z.
        return sum(k * c * (r ** k - 1) for k, c in pairs) - (max_energy + 1) * math.log(r)

    best = minimize_scalar(log_bound, bounds=(1.0, 16.0), method='bounded')
    return float(min(1.0, math.exp(min(best.fun, 0.0))))


@lru_cache(maxsize=4)
def _table(spec, max_energy):
    return measure_table(spec, max_energy)


@lru_cache(maxsize=8)
def _window_distribution(spec, max_energy, low, high):
    """Map frozenset of occupied lattice sites in [low, high] -> probability."""
    distribution = {}
    for partition, probability in _table(spec, max_energy):
        length = len(partition)
        occupied = set(partition.positions())
        key = frozenset(y for y in range(low, high + 1) if y in occupied or y < -length)
        distribution[key] = distribution.get(key, 0.0) + float(np.real(probability))
    return distribution


def brute_force_correlation(spec, points, max_energy, window=None):
    """
    Prob{X ⊂ 𝔖(λ)} by summing the measure over |λ| ≤ max_energy.

    Args:
        spec: PoissonizedPlancherel or a positive Schur measure
        points: Half-integers X
        max_energy: Truncation E_max (at most 60)
        window: Optional (low, high) half-integers containing X; queries
            sharing a window reuse one pass over the partitions

    Returns:
        TruncatedProbability
    """
    if isinstance(spec, Schur) and not spec.positive:
        raise ArgumentError("brute-force correlations need a positive Schur measure")
    if not isinstance(spec, (PoissonizedPlancherel, Schur)):
        raise ArgumentError(f"brute-force correlations are not available for {spec!r}")
    indices = _distinct(points)
    if window is None:
        low, high = (min(indices), max(indices)) if indices else (0, 0)
    else:
        low, high = lattice_index(window[0]), lattice_index(window[1])
        if indices and (min(indices) < low or max(indices) > high):
            raise ArgumentError("points must lie inside the window")
    wanted = frozenset(indices)
    distribution = _window_distribution(spec, max_energy, low, high)
    value = sum(p for key, p in distribution.items() if wanted <= key)
    return TruncatedProbability(value, _tail_bound(spec, max_energy))
