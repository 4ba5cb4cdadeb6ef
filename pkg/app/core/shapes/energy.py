"""
The hook functional, the surface tension of a periodic potential, and the action.

For a profile with slopes σ_j on cells of width δ, every cell-pair integral of
log(t − s) is exact: with G(x) = x² log x/2 − 3x²/4,

    ∬_{cell j < cell k} log(t − s) = G((m+1)δ) − 2G(mδ) + G((m−1)δ),  m = k − j
    ∬_{s<t in one cell} log(t − s) = G(δ)

so the functional is a quadratic form in the slopes.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import matmul_toeplitz, toeplitz

from ...types import ArgumentError, NumericError

logger = logging.getLogger(__name__)

# Refined and plain evaluations of the hook functional must agree to this.
REFINEMENT_TOLERANCE = 1e-6

# Above this many cells the quadratic forms go through FFT Toeplitz products.
DENSE_LIMIT = 2048

_FORMS = ('measure', 'literal')


def _G(x):
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0, x, 1.0)
    return np.where(x > 0, x * x * np.log(safe) / 2 - 0.75 * x * x, 0.0)


def _log_row(cells, width):
    offsets = np.arange(1, cells) * width
    far = _G(offsets + width) - 2 * _G(offsets) + _G(offsets - width)
    return np.concatenate(([_G(width)], far))


def log_matrix(cells, width):
    """
    Upper-triangular U with U_jk = ∬_{s<t, s in cell j, t in cell k} log(t − s).
    """
    first_row = _log_row(cells, width)
    first_column = np.zeros(cells)
    first_column[0] = first_row[0]
    return toeplitz(first_column, first_row)


def _upper_form(a, first_row, b):
    """a·T·b for the upper-triangular Toeplitz T with the given first row."""
    first_column = np.zeros(len(first_row))
    first_column[0] = first_row[0]
    if len(first_row) <= DENSE_LIMIT:
        return a @ toeplitz(first_column, first_row) @ b
    return a @ matmul_toeplitz((first_column, first_row), b)


def _energy(slopes, width, form):
    slopes = np.asarray(slopes, dtype=float)
    a, b = 1 + slopes, 1 - slopes
    cells = len(slopes)
    weighted = _upper_form(a, _log_row(cells, width), b)
    if form == 'measure':
        return weighted / 2
    area_row = np.full(cells, width * width)
    area_row[0] /= 2
    area = _upper_form(a, area_row, b)
    return 2 * (weighted + math.log(2) * area)


def hook_energy(profile, form='measure', check=True, tolerance=REFINEMENT_TOLERANCE):
    """
    The hook functional of a discrete profile.

    form='measure': ½∬_{s<t} (1+f'(s))(1−f'(t)) log(t−s) ds dt, normalized
    so that log(ξ^{|λ|}(dim λ/|λ|!)²) ≈ −ξ·E for diagrams scaled by √ξ;
    E(Ω) = −1.

    form='literal': 2∬_{s<t} (1+f'(s))(1−f'(t)) log 2(t−s) ds dt.

    Cell-pair integrals are closed form, so a profile that is itself piecewise
    linear (a diagram, a solver output) is integrated exactly. A profile
    sampled from a continuous source is also evaluated on the source
    re-sampled at twice the cells.

    Args:
        profile: DiscreteProfile
        form: 'measure' or 'literal'
        check: Run the refinement test on sampled profiles
        tolerance: Largest relative change allowed under refinement

    Raises:
        NumericError: If refining the grid changes the value by more than
            tolerance (the grid is too coarse for the source)
    """
    if form not in _FORMS:
        raise ArgumentError(f"unknown hook-energy form {form!r}; expected one of {_FORMS}")
    value = _energy(profile.slopes, profile.width, form)
    if check and profile.source is not None:
        refined = _energy(profile.refine().slopes, profile.width / 2, form)
        change = abs(refined - value) / max(1.0, abs(value))
        logger.debug("hook functional on %d cells: %.12g, refined %.12g", len(profile), value, refined)
        if change > tolerance:
            raise NumericError(f"grid of {len(profile)} cells is too coarse: refinement changes "
                               f"the hook functional by {change:.3g} (tolerance {tolerance:g})",
                               {'value': value, 'refined': refined, 'cells': len(profile)})
    return float(value)


@dataclass(frozen=True)
class SurfaceTension:
    """
    σ_U: convex, piecewise linear on [−1, 1] with N equal segments.

    Attributes:
        slopes: Segment slopes, nondecreasing left to right (the sorted u_k)
    """
    slopes: tuple

    @property
    def pieces(self):
        return len(self.slopes)

    @property
    def breakpoints(self):
        return np.linspace(-1.0, 1.0, self.pieces + 1)

    @property
    def values(self):
        """σ_U at the breakpoints; σ_U(−1) = 0."""
        steps = np.asarray(self.slopes, dtype=float) * (2 / self.pieces)
        return np.concatenate(([0.0], np.cumsum(steps)))

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        if np.any(np.abs(s) > 1 + 1e-12):
            raise ArgumentError("surface tension is defined on [−1, 1]")
        result = np.interp(s, self.breakpoints, self.values)
        return float(result) if result.ndim == 0 else result


def surface_tension(u):
    """
    σ_U for the potential values u_{1/2}, …, u_{N−1/2}.

    Raises:
        ArgumentError: If the values do not sum to zero
    """
    u = [float(v) for v in u]
    if not u:
        raise ArgumentError("the potential needs at least one value")
    if abs(sum(u)) > 1e-12 * max(1.0, max(abs(v) for v in u)):
        raise ArgumentError(f"potential values must sum to zero, got {sum(u)}")
    return SurfaceTension(tuple(sorted(u)))


def action_value(profile, u, kappa):
    """S(f) = −E(f) − κ∫σ_U(f'(t)) dt over the grid."""
    tension = surface_tension(u)
    penalty = float(np.sum(tension(profile.slopes))) * profile.width
    return -hook_energy(profile, check=False) - kappa * penalty
