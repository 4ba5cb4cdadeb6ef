"""
Limit shapes from the conformal map w + 1/w = B(z).

For a monic real polynomial B of degree N with no z^{N−1} term, the branch
w = (B + √(B² − 4))/2 with |w| ≥ 1 maps the upper half-plane onto a slit
domain, and Φ = 1 + (2i/(πN)) log w has Re Φ(x + i0) equal to the slope of the
limit shape. Bands are where |B(x)| ≤ 2; in between lie the gaps, whose Im Φ
integrals (the periods) are matched to the jumps of the potential.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev
from scipy.integrate import quad
from scipy.optimize import brentq, minimize_scalar, root

from ...types import ArgumentError, DomainError, NumericError
from .discrete import DiscreteProfile, uniform_edges
from .maximize import default_half_width, maximize_action
from .vkls import DEFAULT_HALF_WIDTH

logger = logging.getLogger(__name__)

# (π/2)·period = κ·(jump of the potential) across every gap.
PERIOD_CONSTANT = math.pi / 2

# Closed gaps and merged bands are told apart at this tolerance.
GAP_TOLERANCE = 1e-9

# Largest jump of arg w between consecutive points of a tracking path.
BRANCH_JUMP = 1.0

# Points on the path used to continue log w from infinity.
PATH_POINTS = 2000

# Required accuracy of the period matching.
MATCH_TOLERANCE = 1e-8

# Scale of the Chebyshev starting curve; > 1 opens every gap.
INITIAL_SCALE = 1.2


@dataclass(frozen=True)
class SWCurveData:
    """
    B(z) = z^N + b_{N−2} z^{N−2} + … + b_0.

    Attributes:
        degree: N ≥ 1
        lower: Real coefficients (b_{N−2}, …, b_0)
    """
    degree: int
    lower: tuple = ()

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ArgumentError(f"curve degree must be a positive integer, got {self.degree!r}")
        lower = tuple(float(b) for b in self.lower)
        if len(lower) != self.degree - 1:
            raise ArgumentError(f"degree {self.degree} needs {self.degree - 1} free coefficients")
        object.__setattr__(self, 'lower', lower)

    @property
    def coefficients(self):
        """Power-basis coefficients, highest degree first."""
        return np.array((1.0, 0.0) + self.lower)[:self.degree + 1]

    def __call__(self, z):
        return np.polyval(self.coefficients, z)

    def critical_points(self):
        """Real parts of the roots of B', decreasing."""
        if self.degree < 2:
            return np.array([])
        roots = np.roots(np.polyder(self.coefficients))
        return np.sort(roots.real)[::-1]

    def radius(self):
        """Bound on |z| for every root of B ∓ 2."""
        return 3.0 + max([0.0] + [abs(b) for b in self.lower])


def chebyshev_curve(degree, scale=1.0):
    """
    B(z) = s^N·2T_N(z/(2s)).

    At s = 1 every gap is closed and the limit shape is Ω; s > 1 opens all gaps.
    """
    if degree < 1:
        raise ArgumentError(f"curve degree must be positive, got {degree}")
    power = chebyshev.cheb2poly([0] * degree + [1])
    coefficients = [2 * scale ** degree * power[k] / (2 * scale) ** k for k in range(degree + 1)]
    return SWCurveData(degree, tuple(coefficients[k] for k in range(degree - 2, -1, -1)))


def _gap_heights(curve, critical):
    """(−1)^k B(c_k) − 2 for each critical point; negative means the bands overlap."""
    signs = np.array([(-1) ** k for k in range(1, len(critical) + 1)])
    return signs * curve(critical) - 2


def _validate(curve):
    if curve.degree < 2:
        return np.array([])
    roots = np.roots(np.polyder(curve.coefficients))
    if np.any(np.abs(roots.imag) > GAP_TOLERANCE * max(1.0, curve.radius())):
        raise DomainError("B has complex critical points; the bands overlap")
    critical = np.sort(roots.real)[::-1]
    heights = _gap_heights(curve, critical)
    if np.any(heights < -GAP_TOLERANCE):
        raise DomainError(
            f"bands overlap at the critical points {critical[heights < -GAP_TOLERANCE].tolist()}")
    return critical


def _theta(curve, x, critical):
    """arg w(x + i0), from 0 right of every band to Nπ left of them."""
    x = np.asarray(x, dtype=float)
    segment = np.searchsorted(-critical, -x, side='left') if len(critical) else np.zeros(x.shape, dtype=int)
    sign = np.where(segment % 2, -1.0, 1.0)
    return segment * math.pi + np.arccos(np.clip(sign * curve(x) / 2, -1.0, 1.0))


def _real_phi(curve, x, critical):
    theta = _theta(curve, x, critical)
    n = curve.degree
    modulus = np.arccosh(np.maximum(np.abs(curve(x)) / 2, 1.0))
    return (1 - 2 * theta / (math.pi * n)) + 1j * (2 / (math.pi * n)) * modulus


def real_axis_phi(curve, x):
    """
    Φ(x + i0) at a real point or array.

    Raises:
        DomainError: If the curve's bands overlap
    """
    critical = _validate(curve)
    result = _real_phi(curve, x, critical)
    return complex(result) if np.ndim(result) == 0 else result


def _branch(values):
    """w with |w| ≥ 1 from w + 1/w = B."""
    root_term = np.sqrt(values.astype(complex) ** 2 - 4)
    first = (values + root_term) / 2
    second = (values - root_term) / 2
    return np.where(np.abs(first) >= np.abs(second), first, second)


def sw_map(curve, z):
    """
    (w, Φ) at a point of the closed upper half-plane.

    Off the real axis, arg w is continued down a vertical path from a height
    where w ≈ z^N.

    Raises:
        ArgumentError: If Im z < 0
        NumericError: If arg w jumps along the path
    """
    z = complex(z)
    if z.imag < 0:
        raise ArgumentError(f"Φ is defined on the upper half-plane, got {z}")
    n = curve.degree
    if z.imag == 0:
        phi = real_axis_phi(curve, z.real)
        log_w = (phi - 1) * math.pi * n / 2j
        return complex(np.exp(log_w)), phi

    top = 10 * (1 + abs(z) + curve.radius())
    heights = z.imag + top * np.geomspace(1.0, 1e-10, PATH_POINTS)
    path = np.concatenate((z.real + 1j * heights, [z]))
    w = _branch(curve(path))
    phases = np.angle(w)
    lifted = np.unwrap(phases)
    jumps = np.abs(np.diff(lifted))
    if len(jumps) and np.max(jumps) > BRANCH_JUMP:
        raise NumericError("branch tracking failed along the evaluation path",
                           {'z': z, 'jump': float(np.max(jumps))})
    start = n * np.angle(path[0]) + np.angle(w[0] / path[0] ** n)
    argument = lifted[-1] + (start - lifted[0])
    log_w = math.log(abs(w[-1])) + 1j * argument
    return complex(w[-1]), complex(1 + 2j / (math.pi * n) * log_w)


def _support_radius(curve):
    """Largest |x| with |B(x)| ≤ 2."""
    square = np.polysub(np.polymul(curve.coefficients, curve.coefficients), [4.0])
    roots = np.roots(square)
    real = roots[np.abs(roots.imag) < 1e-6].real
    return float(np.max(np.abs(real))) if len(real) else 0.0


def maximizer_from_map(curve, cells=512, half_width=None):
    """
    Limit shape with slopes Re Φ(x + i0), averaged exactly over each cell.

    Args:
        curve: SWCurveData
        cells: Number of cells
        half_width: Window [−L, L]; defaults to the support plus one

    Returns:
        DiscreteProfile
    """
    critical = _validate(curve)
    if half_width is None:
        half_width = max(DEFAULT_HALF_WIDTH, _support_radius(curve) + 1)
    edges = uniform_edges(cells, half_width)
    breaks = np.concatenate((critical, _band_edges(curve, critical)))

    def slope(x):
        return float(_real_phi(curve, x, critical).real)

    averages = np.empty(cells)
    for i in range(cells):
        a, b = edges[i], edges[i + 1]
        inside = [p for p in breaks if a < p < b]
        value, _ = quad(slope, a, b, points=inside or None, epsabs=1e-12, epsrel=1e-12, limit=200)
        averages[i] = value / (b - a)
    return DiscreteProfile(edges, averages, {'degree': curve.degree, 'lower': curve.lower})


def _band_edges(curve, critical):
    """Endpoints of every band, i.e. the roots of B = ±2 on each monotone segment."""
    radius = curve.radius()
    bounds = np.concatenate(([radius], critical, [-radius]))
    edges = []
    for j in range(len(bounds) - 1):
        high, low = bounds[j], bounds[j + 1]
        sign = -1.0 if j % 2 else 1.0
        for level in (2.0, -2.0):
            def shifted(x, level=level, sign=sign):
                return sign * curve(x) - level
            if shifted(low) * shifted(high) < 0:
                edges.append(brentq(shifted, low, high, xtol=1e-14))
    return np.array(sorted(edges))


def _gap_ends(curve, critical, k):
    """Endpoints of gap k (from the right) around the critical point c_k."""
    radius = curve.radius()
    c = critical[k - 1]
    right_bound = critical[k - 2] if k >= 2 else radius
    left_bound = critical[k] if k < len(critical) else -radius
    sign = (-1) ** k

    def height(x):
        return sign * curve(x) - 2

    if height(c) <= 0:
        return c, c
    if height(left_bound) >= 0 or height(right_bound) >= 0:
        raise DomainError(f"gap {k} is not separated from its neighbours")
    return brentq(height, left_bound, c, xtol=1e-14), brentq(height, c, right_bound, xtol=1e-14)


def _period(curve, critical, k):
    a, b = _gap_ends(curve, critical, k)
    if b <= a:
        return 0.0
    n = curve.degree
    value, _ = quad(lambda x: math.acosh(max(abs(float(curve(x))) / 2, 1.0)), a, b,
                    points=[critical[k - 1]], epsabs=1e-12, epsrel=1e-12, limit=200)
    return 2 / (math.pi * n) * value


def sw_periods(curve):
    """
    Gap periods ∫_gap Im Φ(x + i0) dx = i∮ z dΦ, gaps numbered from the right.

    Returns:
        List of N − 1 nonnegative reals

    Raises:
        DomainError: If the bands overlap
    """
    critical = _validate(curve)
    return [_period(curve, critical, k) for k in range(1, curve.degree)]


def _signed_periods(curve):
    """Periods, continued below zero by the critical-value deficit when gaps overlap."""
    critical = curve.critical_points()
    heights = _gap_heights(curve, critical)
    periods = []
    for k in range(1, curve.degree):
        try:
            periods.append(_period(curve, critical, k) if heights[k - 1] >= 0 else heights[k - 1])
        except DomainError:
            periods.append(min(heights[k - 1], 0.0))
    return np.array(periods)


@dataclass(frozen=True)
class PeriodMatch:
    """
    Result of matching the periods to a potential.

    Attributes:
        curve: SWCurveData
        constant: C in C·period = κ·(u_{k−1/2} − u_{k+1/2})
        residual: Largest mismatch of the matching equations
        evaluations: Function evaluations used by the root finder
    """
    curve: SWCurveData
    constant: float
    residual: float
    evaluations: int


def _jumps(u, kappa):
    u = [float(v) for v in u]
    if len(u) < 2:
        raise ArgumentError("period matching needs at least two potential values")
    if any(a <= b for a, b in zip(u, u[1:])):
        raise ArgumentError(f"potential values must be strictly decreasing, got {u}")
    if not kappa > 0:
        raise ArgumentError(f"κ must be positive, got {kappa}")
    return np.array([kappa * (a - b) for a, b in zip(u, u[1:])])


def match_periods(u, kappa, constant=PERIOD_CONSTANT, guess=None):
    """
    The curve whose gap periods reproduce the jumps of the potential.

    Solves C·P_k(B) = κ(u_{k−1/2} − u_{k+1/2}) for the N − 1 free coefficients
    of B, starting from a Chebyshev curve with every gap open.

    Args:
        u: Strictly decreasing potential values u_{1/2} > u_{3/2} > …
        kappa: κ > 0
        constant: C; PERIOD_CONSTANT by default
        guess: Optional SWCurveData to start from

    Returns:
        PeriodMatch

    Raises:
        NumericError: If the root finder fails or leaves a residual above MATCH_TOLERANCE
    """
    targets = _jumps(u, kappa)
    degree = len(targets) + 1
    start = guess if guess is not None else chebyshev_curve(degree, INITIAL_SCALE)
    if start.degree != degree:
        raise ArgumentError(f"initial curve has degree {start.degree}, expected {degree}")

    def equations(lower):
        return constant * _signed_periods(SWCurveData(degree, tuple(lower))) - targets

    solution = root(equations, np.array(start.lower), method='hybr')
    residual = float(np.max(np.abs(equations(solution.x))))
    logger.debug("match_periods: %s, residual %.3g after %d evaluations",
                 solution.message, residual, solution.nfev)
    if residual > MATCH_TOLERANCE:
        raise NumericError("period matching did not converge",
                           {'residual': residual, 'message': solution.message,
                            'evaluations': int(solution.nfev), 'last': solution.x.tolist()})
    curve = SWCurveData(degree, tuple(solution.x))
    _validate(curve)
    return PeriodMatch(curve, constant, residual, int(solution.nfev))


@dataclass(frozen=True)
class Calibration:
    """
    The period constant re-derived from the direct maximizer.

    Attributes:
        constant: Fitted C
        reference: PERIOD_CONSTANT
        relative_residual: (C − reference)/reference
        distance: Sup slope distance between the two shapes at the fitted C
    """
    constant: float
    reference: float
    relative_residual: float
    distance: float


def calibrate_period_constant(u, kappa, cells=512, half_width=None):
    """
    Fit C so the conformal-map shape best matches the direct maximizer.

    Minimizes the mean squared slope difference over C ∈ [reference/2, 2·reference].
    """
    half_width = default_half_width(u, kappa) if half_width is None else half_width
    direct = maximize_action(u, kappa, cells, half_width)

    def mismatch(constant):
        curve = match_periods(u, kappa, constant).curve
        shape = maximizer_from_map(curve, cells, half_width)
        return float(np.mean((shape.slopes - direct.slopes) ** 2))

    best = minimize_scalar(mismatch, bounds=(PERIOD_CONSTANT / 2, 2 * PERIOD_CONSTANT),
                           method='bounded', options={'xatol': 1e-4})
    curve = match_periods(u, kappa, best.x).curve
    distance = maximizer_from_map(curve, cells, half_width).sup_distance(direct)
    logger.debug("calibrate_period_constant: C = %.6g after %d evaluations", best.x, best.nfev)
    return Calibration(float(best.x), PERIOD_CONSTANT,
                       float((best.x - PERIOD_CONSTANT) / PERIOD_CONSTANT), distance)


def facets(profile, slope, tolerance=1e-6):
    """
    Maximal runs of cells whose slope equals `slope`.

    Returns:
        List of (start, end) abscissae
    """
    flat = np.abs(profile.slopes - slope) <= tolerance
    runs = []
    start = None
    for i, on in enumerate(flat):
        if on and start is None:
            start = i
        elif not on and start is not None:
            runs.append((float(profile.edges[start]), float(profile.edges[i])))
            start = None
    if start is not None:
        runs.append((float(profile.edges[start]), float(profile.edges[-1])))
    return runs
