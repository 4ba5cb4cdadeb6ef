"""Profiles of diagrams in the rotated (Russian) convention."""

import numpy as np

from ...types import ArgumentError


class Profile:
    """
    Piecewise-linear 1-Lipschitz function equal to |x| outside its breakpoints.

    Attributes:
        breakpoints: Increasing abscissae
        heights: Values at the breakpoints
    """

    def __init__(self, breakpoints, heights):
        if len(breakpoints) != len(heights) or not breakpoints:
            raise ArgumentError("breakpoints and heights must be nonempty and aligned")
        self.breakpoints = tuple(breakpoints)
        self.heights = tuple(heights)

    def __repr__(self):
        return f"Profile(breakpoints={len(self.breakpoints)})"

    @property
    def slopes(self):
        """Slopes on consecutive breakpoint intervals."""
        b, h = self.breakpoints, self.heights
        return tuple((h[i + 1] - h[i]) / (b[i + 1] - b[i]) for i in range(len(b) - 1))

    def __call__(self, x):
        """Evaluate at a point or array of points."""
        x = np.asarray(x, dtype=float)
        inside = np.interp(x, np.asarray(self.breakpoints, dtype=float),
                           np.asarray(self.heights, dtype=float))
        outside = (x < float(self.breakpoints[0])) | (x > float(self.breakpoints[-1]))
        result = np.where(outside, np.abs(x), inside)
        return float(result) if result.ndim == 0 else result

    def area(self):
        """∫ (f(x) − |x|) dx, exact for exact breakpoints spanning 0."""
        b, h = self.breakpoints, self.heights
        under_f = sum((h[i] + h[i + 1]) * (b[i + 1] - b[i]) for i in range(len(b) - 1)) / 2
        left, right = b[0], b[-1]
        under_abs = (left * left + right * right) / 2
        return under_f - under_abs


def profile(partition, scale=1):
    """
    Profile f_λ, optionally scaled in both directions.

    Args:
        partition: The diagram
        scale: Positive factor applied to both axes (1/√|λ| for the scaled shape)

    Returns:
        Profile with breakpoints at the integers −ℓ(λ)..λ_1 times scale
    """
    if not scale > 0:
        raise ArgumentError(f"scale must be positive, got {scale}")
    length = len(partition)
    top = partition.part(1)
    occupied = set(partition.positions())
    breakpoints = list(range(-length, top + 1))
    heights = [length]
    for k in breakpoints[:-1]:
        heights.append(heights[-1] + (-1 if k in occupied else 1))
    if scale != 1:
        breakpoints = [b * scale for b in breakpoints]
        heights = [h * scale for h in heights]
    return Profile(breakpoints, heights)
