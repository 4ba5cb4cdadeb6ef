"""Bands of the symbol g(φ) = z P'(z) and the limiting local statistics."""

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ...types import ArgumentError, DegenerateLevelWarning, DomainError
from ..kernels import MultiBand, kernel_eval
from ..measures import Schur

logger = logging.getLogger(__name__)

# Sample points of the scan for roots of g(φ) − x̄.
SCAN_POINTS = 4096

# Start of the scan past −π; keeps symmetric roots off the grid.
SCAN_OFFSET = 1e-4 * math.sqrt(2)

# Imaginary parts of g above this mean the data are not conjugate.
REALITY_TOLERANCE = 1e-12

# A level this close to a critical value of g is degenerate.
DEGENERATE_TOLERANCE = 1e-12


def _coefficients(spec):
    if not isinstance(spec, Schur):
        raise ArgumentError(f"band structure needs Schur data, got {spec!r}")
    t = [complex(v) for v in spec.t]
    tbar = [complex(v) for v in spec.tbar]
    size = max(len(t), len(tbar))
    t += [0j] * (size - len(t))
    tbar += [0j] * (size - len(tbar))
    scale = max([1.0] + [abs(v) for v in t + tbar])
    if any(abs(b - a.conjugate()) > REALITY_TOLERANCE * scale for a, b in zip(t, tbar)):
        raise DomainError("g(φ) is real only when t̄ is the conjugate of t")
    return np.array(t), np.array(tbar)


def _evaluate(t, tbar, phi, derivative=0):
    phi = np.asarray(phi, dtype=float)
    total = np.zeros(phi.shape, dtype=complex)
    for k in range(1, len(t) + 1):
        factor = (1j * k) ** derivative
        total += k * factor * t[k - 1] * np.exp(1j * k * phi)
        total += k * np.conj(factor) * tbar[k - 1] * np.exp(-1j * k * phi)
    return total.real


def g_of_phi(spec, phi):
    """
    g(φ) = Σ k t_k e^{ikφ} + Σ k t̄_k e^{−ikφ}.

    Args:
        spec: Schur data with t̄ = conj(t)
        phi: Angle or array of angles

    Raises:
        DomainError: If t̄ is not the conjugate of t
    """
    t, tbar = _coefficients(spec)
    result = _evaluate(t, tbar, phi)
    return float(result) if result.ndim == 0 else result


def _scan():
    return -math.pi + SCAN_OFFSET + np.linspace(0.0, 2 * math.pi, SCAN_POINTS + 1)


def _roots(function, grid):
    """Sign changes on one turn of the circle, as sorted angles in [−π, π)."""
    values = function(grid)
    found = []
    for i in range(len(grid) - 1):
        a, b = values[i], values[i + 1]
        if a == 0:
            found.append(grid[i])
        elif a * b < 0:
            found.append(brentq(function, grid[i], grid[i + 1], xtol=1e-15))
    return sorted((root + math.pi) % (2 * math.pi) - math.pi for root in found)


def critical_values(spec):
    """Values of g at its critical points on the circle."""
    t, tbar = _coefficients(spec)
    points = _roots(lambda phi: _evaluate(t, tbar, phi, derivative=1), _scan())
    return sorted(float(_evaluate(t, tbar, p)) for p in points)


@dataclass(frozen=True)
class BandGapStructure:
    """
    {φ : g(φ) ≥ x̄} as a union of arcs.

    Attributes:
        level: x̄
        intervals: Disjoint (α, β) with −π ≤ α < β ≤ α + 2π; an arc through
            φ = π is reported once, with β > π
    """
    level: float
    intervals: tuple

    @property
    def total_length(self):
        return sum(b - a for a, b in self.intervals)

    def arcs(self):
        """The intervals moved into [0, 2π] and split where they wrap."""
        pieces = []
        for a, b in self.intervals:
            a, b = a % (2 * math.pi), a % (2 * math.pi) + (b - a)
            if b <= 2 * math.pi + 1e-15:
                pieces.append((a, min(b, 2 * math.pi)))
            else:
                pieces.append((a, 2 * math.pi))
                pieces.append((0.0, b - 2 * math.pi))
        return tuple(sorted((a, b) for a, b in pieces if b > a))


def bands_at_level(spec, level):
    """
    Arcs where g(φ) ≥ x̄, endpoints refined by bracketed root finding.

    Warns with DegenerateLevelWarning when x̄ is within DEGENERATE_TOLERANCE
    of a critical value of g (an edge of the limit shape).
    """
    t, tbar = _coefficients(spec)
    level = float(level)

    def shifted(phi):
        return _evaluate(t, tbar, phi) - level

    for value in critical_values(spec):
        if abs(value - level) <= DEGENERATE_TOLERANCE * max(1.0, abs(value)):
            logger.warning("level %.15g is a critical value of g", level)
            warnings.warn(f"level {level} is a critical value of g(φ)", DegenerateLevelWarning,
                          stacklevel=2)
            break

    grid = _scan()
    roots = _roots(shifted, grid)
    if not roots:
        if np.mean(shifted(grid)) > 0:
            return BandGapStructure(level, ((-math.pi, math.pi),))
        return BandGapStructure(level, ())

    intervals = []
    for i, start in enumerate(roots):
        end = roots[i + 1] if i + 1 < len(roots) else roots[0] + 2 * math.pi
        if end - start <= 0:
            continue
        if shifted((start + end) / 2) > 0:
            intervals.append((start, end))
    logger.debug("bands_at_level: %d arcs at x̄ = %g", len(intervals), level)
    return BandGapStructure(level, tuple(intervals))


def limit_density(spec, level):
    """Σ |β_i − α_i| / 2π, the limiting density of particles at x̄."""
    return bands_at_level(spec, level).total_length / (2 * math.pi)


def limit_kernel(spec, level, offset):
    """
    Translation-invariant limiting kernel K(Δx) at x̄.

    The multi-band sine kernel of the arcs where g ≥ x̄.
    """
    if int(offset) != offset:
        raise ArgumentError(f"the lattice offset must be an integer, got {offset}")
    arcs = bands_at_level(spec, level).arcs()
    if not arcs:
        return 0.0
    return float(kernel_eval(MultiBand(arcs), int(offset) + 0.5, 0.5))
