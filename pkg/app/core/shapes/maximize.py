"""
Direct maximization of the action S(f) = −E(f) − κ∫σ_U(f').

Each cell slope is split along the segments of σ_U, s = −1 + Σ_i y_i with
y_i ∈ [0, 2/N]; filling the cheapest segments first reproduces σ_U(s) = Σ c_i y_i,
so the penalty becomes linear and the problem is a smooth concave program over a
box intersected with the neutrality hyperplane Σ s = 0. It is solved by
accelerated projected gradient ascent with adaptive restart.
"""

import logging

import numpy as np
from scipy.optimize import brentq

from ...types import ArgumentError, NumericError
from .discrete import DiscreteProfile, uniform_edges
from .energy import log_matrix, surface_tension

logger = logging.getLogger(__name__)

# Stop once the gradient mapping falls below this (∞-norm).
GRADIENT_TOLERANCE = 1e-8

# Iteration cap of the ascent.
MAX_ITERATIONS = 50000

# Fewest cells the maximizer accepts.
MIN_CELLS = 64


def default_half_width(u, kappa):
    """Window half-width covering the support with room for facets."""
    u = [float(v) for v in u]
    return 3.0 + kappa * (max(u) - min(u)) / 2


def _project(v, capacity, total):
    """Closest point of {0 ≤ y ≤ capacity, Σ y = total} to v."""
    def excess(shift):
        return np.clip(v - shift, 0.0, capacity).sum() - total

    shift = brentq(excess, v.min() - capacity, v.max(), xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return np.clip(v - shift, 0.0, capacity)


def _fill(slopes, pieces):
    """Greedy split of slopes into segment variables, shape (cells, pieces)."""
    capacity = 2.0 / pieces
    remaining = slopes + 1.0
    y = np.zeros((len(slopes), pieces))
    for i in range(pieces):
        y[:, i] = np.clip(remaining, 0.0, capacity)
        remaining = remaining - y[:, i]
    return y


def maximize_action(u, kappa, cells=512, half_width=None):
    """
    Maximizer of the action on a symmetric window with neutral boundary.

    Args:
        u: Potential values summing to zero (u ≡ 0 gives Ω)
        kappa: Weight κ > 0 of the surface tension
        cells: Grid resolution, at least MIN_CELLS
        half_width: Window [−L, L]; default_half_width(u, κ) when omitted

    Returns:
        DiscreteProfile whose diagnostics hold iterations, residual and objective

    Raises:
        NumericError: If the ascent does not converge within MAX_ITERATIONS
    """
    if not kappa > 0:
        raise ArgumentError(f"κ must be positive, got {kappa}")
    if cells < MIN_CELLS:
        raise ArgumentError(f"the maximizer needs at least {MIN_CELLS} cells, got {cells}")
    tension = surface_tension(u)
    pieces = tension.pieces
    half_width = default_half_width(u, kappa) if half_width is None else half_width
    edges = uniform_edges(cells, half_width)
    width = edges[1] - edges[0]

    U = log_matrix(cells, width)
    symmetric = U + U.T
    ones = np.ones(cells)
    linear = (U @ ones - U.T @ ones) / 2
    costs = kappa * width * np.asarray(tension.slopes)

    def slopes_of(y):
        return y.sum(axis=1) - 1.0

    def gradient(y):
        s = slopes_of(y)
        # ∂E/∂s = ½(U1 − Uᵀ1) − ½(U + Uᵀ)s
        dE = linear - symmetric @ s / 2
        return -dE[:, None] - costs[None, :]

    def objective(y):
        s = slopes_of(y)
        return -((1 + s) @ U @ (1 - s)) / 2 - float(np.sum(costs[None, :] * y))

    projector = np.eye(cells) - 1.0 / cells
    curvature = np.max(np.abs(np.linalg.eigvalsh(projector @ (symmetric / 2) @ projector)))
    lipschitz = pieces * curvature
    capacity = 2.0 / pieces

    y = _fill(np.sign(edges[:-1] + width / 2), pieces)
    z = y.copy()
    momentum = 1.0
    residual = float('inf')
    for iteration in range(1, MAX_ITERATIONS + 1):
        step = z + gradient(z) / lipschitz
        y_next = _project(step.ravel(), capacity, float(cells)).reshape(y.shape)
        residual = lipschitz * float(np.max(np.abs(y_next - z)))
        if residual < GRADIENT_TOLERANCE:
            y = y_next
            break
        if np.sum((z - y_next) * (y_next - y)) > 0:
            momentum = 1.0
            z = y_next
        else:
            following = (1 + np.sqrt(1 + 4 * momentum * momentum)) / 2
            z = y_next + (momentum - 1) / following * (y_next - y)
            momentum = following
        y = y_next
        if iteration % 1000 == 0:
            logger.debug("maximize_action: iteration %d, residual %.3g", iteration, residual)
    else:
        raise NumericError("action maximization did not converge",
                           {'iterations': MAX_ITERATIONS, 'residual': residual,
                            'cells': cells, 'kappa': kappa})

    value = objective(y)
    logger.debug("maximize_action: converged after %d iterations, S = %.10g", iteration, value)
    return DiscreteProfile(edges, slopes_of(y), {
        'iterations': iteration,
        'residual': residual,
        'objective': value,
        'half_width': half_width,
        'kappa': kappa,
    })
