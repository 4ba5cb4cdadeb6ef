"""The Plancherel limit shape Ω and distances of diagrams to it."""

import math

import numpy as np

from ...types import ArgumentError
from ..partitions import profile
from .discrete import DiscreteProfile, uniform_edges

# Default half-width of grids around the support [−2, 2].
DEFAULT_HALF_WIDTH = 3.0


def vkls_profile(x):
    """
    Slope of Ω: (2/π) arcsin(x/2) on [−2, 2], sign(x) outside.

    Accepts a scalar or an array.
    """
    x = np.asarray(x, dtype=float)
    clipped = np.clip(x / 2, -1.0, 1.0)
    result = 2 / math.pi * np.arcsin(clipped)
    return float(result) if result.ndim == 0 else result


def vkls_height(x):
    """Ω(x) = (2/π)(x arcsin(x/2) + √(4 − x²)) on [−2, 2], |x| outside."""
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) <= 2
    clipped = np.clip(x, -2.0, 2.0)
    omega = 2 / math.pi * (clipped * np.arcsin(clipped / 2) + np.sqrt(4 - clipped ** 2))
    result = np.where(inside, omega, np.abs(x))
    return float(result) if result.ndim == 0 else result


def vkls_discrete(cells, half_width=DEFAULT_HALF_WIDTH):
    """
    Ω on a uniform grid, each slope the exact cell average of Ω'.

    Args:
        cells: Number of cells
        half_width: Grid covers [−half_width, half_width]

    Returns:
        DiscreteProfile
    """
    edges = uniform_edges(cells, half_width)
    heights = vkls_height(edges)
    return DiscreteProfile(edges, np.diff(heights) / np.diff(edges), source=vkls_height)


def diagram_profile_distance(partition, scale=None):
    """
    sup_x |f_λ(x) − Ω(x)| for the diagram scaled by `scale` in both axes.

    f_λ has slopes ±1 and |Ω'| < 1 inside (−2, 2), so the extrema of the
    difference lie at breakpoints of f_λ or at ±2.

    Args:
        partition: The diagram
        scale: Scale factor, 1/√|λ| by default
    """
    if partition.size == 0:
        raise ArgumentError("the empty diagram has no scaled profile")
    scale = 1 / math.sqrt(partition.size) if scale is None else scale
    shape = profile(partition, scale)
    breakpoints = np.asarray(shape.breakpoints, dtype=float)
    points = np.concatenate((breakpoints, [-2.0, 2.0]))
    return float(np.max(np.abs(shape(points) - vkls_height(points))))
