"""Evaluation of correlation kernels."""

import logging
import math

import numpy as np

from ...types import ArgumentError, NumericError
from .bessel import BesselTable
from .specs import Bessel, MultiBand, SchurContour, Sine, lattice_index

logger = logging.getLogger(__name__)

# Node count above which the contour quadrature gives up.
NODE_CAP = 2 ** 14

# Successive quadrature values must agree to this.
QUADRATURE_TOLERANCE = 1e-12

# Rows of the node-pair matrix formed at once.
_CHUNK = 256


def _indices(points):
    return np.array([lattice_index(x) for x in points], dtype=int)


def _laurent_exponent(spec, points):
    """T(z) = Σ t_n z^n − Σ t̄_n z^{−n}."""
    value = np.zeros_like(points)
    for n, c in enumerate(spec.t, start=1):
        value += complex(c) * points ** n
    for n, c in enumerate(spec.tbar, start=1):
        value -= complex(c) * points ** (-n)
    return value


def _contour_pass(spec, rows, cols, nodes):
    angles = 2 * np.pi * np.arange(nodes) / nodes
    z = spec.r_z * np.exp(1j * angles)
    w = spec.r_w * np.exp(1j * angles)
    # x = m + 1/2 gives z^{1/2−x} = z^{−m} and w^{y+1/2} = w^{m'+1}.
    left = np.exp(_laurent_exponent(spec, z))[:, None] * z[:, None] ** (-rows[None, :])
    right = np.exp(-_laurent_exponent(spec, w))[:, None] * w[:, None] ** (cols[None, :] + 1)
    result = np.zeros((len(rows), len(cols)), dtype=complex)
    for start in range(0, nodes, _CHUNK):
        stop = min(start + _CHUNK, nodes)
        cauchy = 1.0 / (z[start:stop, None] - w[None, :])
        result += left[start:stop].T @ (cauchy @ right)
    return result / nodes ** 2


def contour_matrix(spec, rows, cols):
    """
    Double trapezoid quadrature of the Schur kernel with node doubling.

    Raises:
        NumericError: If successive values still differ at NODE_CAP nodes
    """
    nodes = spec.nodes
    previous = _contour_pass(spec, rows, cols, nodes)
    difference = float('inf')
    while True:
        nodes *= 2
        if nodes > NODE_CAP:
            raise NumericError("contour quadrature did not converge",
                               {'nodes': nodes // 2, 'difference': float(difference)})
        current = _contour_pass(spec, rows, cols, nodes)
        difference = np.max(np.abs(current - previous)) if current.size else 0.0
        logger.debug("contour quadrature: %d nodes, change %.3g", nodes, difference)
        if difference < QUADRATURE_TOLERANCE:
            break
        previous = current
    if current.size and np.max(np.abs(current.imag)) < 1e-10:
        return current.real
    return current


def _bessel_table_for(spec, rows, cols):
    a = spec.argument
    reach = int(max(np.max(np.abs(rows)), np.max(np.abs(cols)))) + 1
    return BesselTable(a, reach + int(2 * a) + 40)


def bessel_series(table, row, col):
    """Σ_{s≥0} J_{m+1+s} J_{m'+1+s} for lattice indices m, m'."""
    first = max(row, col) + 1
    count = table.top - first + 1
    if count <= 0:
        return 0.0
    steps = np.arange(count)
    return float(np.dot(table(row + 1 + steps), table(col + 1 + steps)))


def _bessel_matrix(spec, rows, cols):
    table = _bessel_table_for(spec, rows, cols)
    root = math.sqrt(spec.xi)
    result = np.empty((len(rows), len(cols)))
    for i, m in enumerate(rows):
        for j, n in enumerate(cols):
            if m == n:
                result[i, j] = bessel_series(table, m, n)
            else:
                result[i, j] = root * (table(m) * table(n + 1) - table(m + 1) * table(n)) / (m - n)
    return result


def _sine_matrix(spec, rows, cols):
    delta = (rows[:, None] - cols[None, :]).astype(float)
    safe = np.where(delta == 0, 1.0, delta)
    return np.where(delta == 0, spec.a / math.pi, np.sin(spec.a * delta) / (math.pi * safe))


def _multiband_matrix(spec, rows, cols):
    delta = (rows[:, None] - cols[None, :]).astype(float)
    safe = np.where(delta == 0, 1.0, delta)
    diagonal = sum(b - a for a, b in spec.intervals) / (2 * math.pi)
    off = sum(np.sin(b * delta) - np.sin(a * delta) for a, b in spec.intervals) / (2 * math.pi * safe)
    return np.where(delta == 0, diagonal, off)


_MATRICES = {
    SchurContour: contour_matrix,
    Bessel: _bessel_matrix,
    Sine: _sine_matrix,
    MultiBand: _multiband_matrix,
}


def kernel_matrix(spec, xs, ys=None):
    """
    [K(x, y)] for half-integer points.

    Args:
        spec: SchurContour, Bessel, Sine or MultiBand
        xs: Row points
        ys: Column points (defaults to xs)

    Returns:
        numpy array of shape (len(xs), len(ys))
    """
    handler = _MATRICES.get(type(spec))
    if handler is None:
        raise ArgumentError(f"unknown kernel: {spec!r}")
    rows = _indices(xs)
    cols = rows if ys is None else _indices(ys)
    if len(rows) == 0 or len(cols) == 0:
        return np.zeros((len(rows), len(cols)))
    return handler(spec, rows, cols)


def kernel_eval(spec, x, y):
    """K(x, y) at two half-integers."""
    return kernel_matrix(spec, [x], [y])[0, 0]
