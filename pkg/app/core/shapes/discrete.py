"""Profiles discretized into cells of constant slope."""

import numpy as np

from ...types import ArgumentError

# Slopes may leave [−1, 1] by this much before they count as invalid.
SLOPE_TOLERANCE = 1e-9


class DiscreteProfile:
    """
    A profile with constant slope on each cell of a uniform grid.

    Outside the grid the profile is |x|, so the height at the left edge is
    |edges[0]| and the far-field slopes are ±1.

    Attributes:
        edges: Cell boundaries, increasing and uniform
        slopes: One slope in [−1, 1] per cell
        diagnostics: Solver information (iterations, residual, objective, …)
        source: Height function the slopes were sampled from, or None when
            the piecewise-linear profile is the object itself
    """

    def __init__(self, edges, slopes, diagnostics=None, source=None):
        edges = np.asarray(edges, dtype=float)
        slopes = np.asarray(slopes, dtype=float)
        if edges.ndim != 1 or len(edges) != len(slopes) + 1 or len(slopes) == 0:
            raise ArgumentError("a profile needs one slope per cell")
        if np.any(np.diff(edges) <= 0):
            raise ArgumentError("cell edges must increase")
        if np.any(np.abs(slopes) > 1 + SLOPE_TOLERANCE):
            raise ArgumentError("slopes must lie in [−1, 1]")
        self.edges = edges
        self.slopes = np.clip(slopes, -1.0, 1.0)
        self.diagnostics = dict(diagnostics or {})
        self.source = source

    def __repr__(self):
        return f"DiscreteProfile(cells={len(self.slopes)}, window=[{self.edges[0]:g}, {self.edges[-1]:g}])"

    def __len__(self):
        return len(self.slopes)

    @property
    def width(self):
        return self.edges[1] - self.edges[0]

    @property
    def midpoints(self):
        return (self.edges[:-1] + self.edges[1:]) / 2

    @property
    def heights(self):
        """Heights at the cell edges."""
        return abs(self.edges[0]) + np.concatenate(([0.0], np.cumsum(self.slopes * np.diff(self.edges))))

    def __call__(self, x):
        """Height at a point or array of points."""
        x = np.asarray(x, dtype=float)
        inside = np.interp(x, self.edges, self.heights)
        outside = (x < self.edges[0]) | (x > self.edges[-1])
        result = np.where(outside, np.abs(x), inside)
        return float(result) if result.ndim == 0 else result

    def slope_at(self, x):
        """Slope of the cell containing x; ±1 outside the grid."""
        x = np.asarray(x, dtype=float)
        index = np.clip(np.searchsorted(self.edges, x, side='right') - 1, 0, len(self.slopes) - 1)
        outside = (x < self.edges[0]) | (x > self.edges[-1])
        result = np.where(outside, np.sign(x), self.slopes[index])
        return float(result) if result.ndim == 0 else result

    def refine(self):
        """
        The source re-sampled on the same window with every cell halved.

        Raises:
            ArgumentError: If the profile has no source
        """
        if self.source is None:
            raise ArgumentError("only a profile sampled from a source can be refined")
        edges = np.linspace(self.edges[0], self.edges[-1], 2 * len(self.slopes) + 1)
        heights = np.asarray(self.source(edges), dtype=float)
        return DiscreteProfile(edges, np.diff(heights) / np.diff(edges), source=self.source)

    def is_neutral(self, tolerance=1e-9):
        """True when the profile returns to |x| at the right edge."""
        return abs(self.heights[-1] - abs(self.edges[-1])) <= tolerance

    def sup_distance(self, other, window=None):
        """
        Largest slope difference over cells, optionally restricted to a window.

        Both profiles must share the same grid.
        """
        if len(self.edges) != len(other.edges) or not np.allclose(self.edges, other.edges):
            raise ArgumentError("profiles live on different grids")
        mask = np.ones(len(self.slopes), dtype=bool)
        if window is not None:
            low, high = window
            mid = self.midpoints
            mask = (mid >= low) & (mid <= high)
        return float(np.max(np.abs(self.slopes[mask] - other.slopes[mask])))


def uniform_edges(cells, half_width):
    """Edges of `cells` equal cells covering [−half_width, half_width]."""
    if cells < 1:
        raise ArgumentError(f"need at least one cell, got {cells}")
    if not half_width > 0:
        raise ArgumentError(f"half width must be positive, got {half_width}")
    return np.linspace(-half_width, half_width, cells + 1)
