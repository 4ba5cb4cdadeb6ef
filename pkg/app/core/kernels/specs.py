"""Correlation kernels on the half-integer lattice."""

import math
from dataclasses import dataclass
from fractions import Fraction

from ...types import ArgumentError

# Starting node count of the contour quadrature.
DEFAULT_NODES = 32


@dataclass(frozen=True)
class SchurContour:
    """
    Double-contour kernel of the Schur measure with data t, t̄.

    Attributes:
        t: Coefficients of the positive powers of T(z)
        tbar: Coefficients of the negative powers of T(z)
        r_z: Radius of the outer circle
        r_w: Radius of the inner circle
        nodes: Initial node count per circle
    """
    t: tuple = ()
    tbar: tuple = ()
    r_z: float = 1.3
    r_w: float = 1 / 1.3
    nodes: int = DEFAULT_NODES

    def __post_init__(self):
        if not self.r_z > self.r_w > 0:
            raise ArgumentError(f"contour radii need r_z > r_w > 0, got {self.r_z}, {self.r_w}")
        if self.nodes < 2:
            raise ArgumentError(f"quadrature needs at least 2 nodes, got {self.nodes}")


@dataclass(frozen=True)
class Bessel:
    """Discrete Bessel kernel of the poissonized Plancherel measure."""
    xi: float

    def __post_init__(self):
        if not self.xi >= 0:
            raise ArgumentError(f"ξ must be nonnegative, got {self.xi}")

    @property
    def argument(self):
        return 2 * math.sqrt(self.xi)


@dataclass(frozen=True)
class Sine:
    """Discrete sine kernel sin(a(x−y))/(π(x−y))."""
    a: float

    def __post_init__(self):
        if not 0 <= self.a <= math.pi:
            raise ArgumentError(f"sine-kernel parameter must lie in [0, π], got {self.a}")


@dataclass(frozen=True)
class MultiBand:
    """
    Multi-frequency sine kernel: Fourier transform of the indicator of ∪[α_i, β_i].

    Attributes:
        intervals: Disjoint pairs (α, β) with 0 ≤ α < β ≤ 2π
    """
    intervals: tuple

    def __post_init__(self):
        bands = tuple(sorted((float(a), float(b)) for a, b in self.intervals))
        for a, b in bands:
            if not 0 <= a < b <= 2 * math.pi:
                raise ArgumentError(f"band [{a}, {b}] is not inside [0, 2π)")
        for (_, b), (a, _) in zip(bands, bands[1:]):
            if a < b:
                raise ArgumentError("bands must be disjoint")
        object.__setattr__(self, 'intervals', bands)


def lattice_index(x):
    """
    Integer y with x = y + 1/2.

    Raises:
        ArgumentError: If x is not a half-integer
    """
    shifted = Fraction(x) - Fraction(1, 2) if not isinstance(x, float) else x - 0.5
    rounded = round(shifted)
    if abs(shifted - rounded) > 1e-9:
        raise ArgumentError(f"{x} is not a half-integer")
    return int(rounded)
