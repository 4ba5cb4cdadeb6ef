"""
Stationary Gromov-Witten invariants of curves as Plancherel averages.

A target of genus g_X weighs λ by (dim λ/d!)^{2−2g_X}; each τ_k(pt) insertion
contributes the z^{k+1} coefficient of the E-eigenvalue, p_{k+1}(λ)/(k+1)!.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import sympy

from ...types import ArgumentError, InvariantViolation, ResourceError
from ..fock import Alpha, E, ECoefficient, OperatorWord, trace_weighted, vacuum_expectation
from ..partitions import dimension, e_coefficient
from .queries import GW_DEGREE_LIMIT, INSERTION_LIMIT, GWQuery
from .reduction import partition_sum

logger = logging.getLogger(__name__)

# Largest degree for the operator route.
GENERATING_DEGREE_LIMIT = 8

# Largest q-order of the elliptic trace.
ELLIPTIC_ORDER_LIMIT = 40


def _check_cost(query):
    if query.degree > GW_DEGREE_LIMIT:
        raise ResourceError(f"degree {query.degree} exceeds the limit {GW_DEGREE_LIMIT}")
    if len(query.insertions) > INSERTION_LIMIT:
        raise ResourceError(
            f"{len(query.insertions)} insertions exceed the limit {INSERTION_LIMIT}")


def _insertion_factor(insertions, partition):
    value = Fraction(1)
    for k in insertions:
        value *= e_coefficient(k + 1, partition)
    return value


def gw_stationary_target(query, workers=None):
    """
    Disconnected stationary invariant of a genus g_X target.

    Σ_{|λ|=d} (dim λ/d!)^{2−2g_X} ∏ p_{k_i+1}(λ)/(k_i+1)!

    Args:
        query: GWQuery
        workers: Thread count for the partition sum, serial by default

    Returns:
        Exact rational

    Raises:
        ResourceError: If the degree or insertion count exceeds its limit
    """
    _check_cost(query)
    exponent = 2 - 2 * query.target_genus
    scale = factorial(query.degree)

    def term(partition):
        return Fraction(dimension(partition), scale) ** exponent * _insertion_factor(
            query.insertions, partition)

    return partition_sum(term, query.degree, workers)


def gw_stationary(query, workers=None):
    """⟨∏τ_{k_i}(pt)⟩_d of P¹ (possibly disconnected domains)."""
    if query.target_genus != 0:
        raise ArgumentError("gw_stationary is the P¹ case; use gw_stationary_target")
    return gw_stationary_target(query, workers)


def vacuum_factor(e):
    """Σ_{|λ|=e} (dim λ/e!)², the degree-e contribution with no insertions."""
    return gw_stationary(GWQuery(e))


@dataclass(frozen=True)
class GWSeries:
    """
    Truncated Laurent series in z_1..z_n.

    Attributes:
        degree: d
        order: Highest power kept in each variable
        coefficients: Map exponent tuple -> exact rational (zeros omitted)
    """
    degree: int
    order: int
    coefficients: dict

    def __getitem__(self, exponents):
        return self.coefficients.get(tuple(exponents), Fraction(0))

    def evaluate(self, z):
        """Sum of the kept terms at the point z."""
        total = 0
        for exponents, value in self.coefficients.items():
            term = complex(value)
            for point, power in zip(z, exponents):
                term *= complex(point) ** power
            total += term
        return total


def _word(degree, middle):
    return OperatorWord([Alpha(1)] * degree + list(middle) + [Alpha(-1)] * degree)


def gw_generating(degree, insertions, order):
    """
    ⟨α_1^d ∏ E(z_i) α_{−1}^d⟩/(d!)² as a series in z_1..z_insertions.

    The z^j coefficient of E(z) is applied as a diagonal operator, so each
    coefficient is a vacuum expectation in the truncated Fock space. The
    coefficient of ∏z_i^{k_i+1} is the stationary invariant with orders k_i.

    Args:
        degree: d ≤ GENERATING_DEGREE_LIMIT
        insertions: Number of E-insertions
        order: Highest power of each z_i kept

    Returns:
        GWSeries with exponents from −1 to order
    """
    if degree > GENERATING_DEGREE_LIMIT:
        raise ResourceError(f"degree {degree} exceeds the limit {GENERATING_DEGREE_LIMIT}")
    if insertions < 0 or order < -1:
        raise ArgumentError("insertion count and order must be nonnegative")
    scale = Fraction(1, factorial(degree) ** 2)
    powers = [j for j in range(-1, order + 1) if j != 0]
    coefficients = {}
    for exponents in itertools.product(powers, repeat=insertions):
        word = _word(degree, [ECoefficient(j) for j in exponents])
        value = vacuum_expectation(word, degree) * scale
        if value != 0:
            coefficients[exponents] = value
    logger.debug("gw_generating: degree %d, %d nonzero terms", degree, len(coefficients))
    return GWSeries(degree, order, coefficients)


def gw_generating_value(degree, z):
    """⟨α_1^d ∏ E(z_i) α_{−1}^d⟩/(d!)² at numeric points z_i."""
    if degree > GENERATING_DEGREE_LIMIT:
        raise ResourceError(f"degree {degree} exceeds the limit {GENERATING_DEGREE_LIMIT}")
    word = _word(degree, [E(point) for point in z])
    return vacuum_expectation(word, degree) / factorial(degree) ** 2


def connected_1pt_series(degree, genus_max):
    """
    Connected one-point invariants from S(z)^{2d−1}/(d!)², S(z) = sinh(z/2)/(z/2).

    The z^{2g} coefficient is ⟨τ_{2g−2+2d}(pt)⟩°_d.

    Returns:
        Map genus -> exact rational; for d = 0 the genus-0 term is omitted
    """
    if degree < 0 or genus_max < 0:
        raise ArgumentError("degree and genus bound must be nonnegative")
    z = sympy.Symbol('z')
    shape = sympy.sinh(z / 2) / (z / 2)
    expansion = sympy.series(shape ** (2 * degree - 1), z, 0, 2 * genus_max + 1).removeO()
    scale = Fraction(1, factorial(degree) ** 2)
    result = {}
    for genus in range(genus_max + 1):
        if 2 * genus - 2 + 2 * degree < 0:
            continue
        coefficient = sympy.Rational(expansion.coeff(z, 2 * genus))
        result[genus] = Fraction(int(coefficient.p), int(coefficient.q)) * scale
    return result


def connected_1pt_factorized(degree, genus_max):
    """
    Connected one-point invariants peeled off the disconnected sums.

    ⟨τ_k⟩_d = Σ_{d'≤d} ⟨τ_k⟩°_{d'}·Z(d − d') with the vacuum factor Z.

    Returns:
        Map genus -> exact rational, as connected_1pt_series
    """
    if degree < 0 or genus_max < 0:
        raise ArgumentError("degree and genus bound must be nonnegative")
    factors = [vacuum_factor(e) for e in range(degree + 1)]
    result = {}
    for genus in range(genus_max + 1):
        k = 2 * genus - 2 + 2 * degree
        if k < 0:
            continue
        connected = {}
        for lower in range(degree + 1):
            value = gw_stationary(GWQuery(lower, (k,)))
            for smaller in range(lower):
                value -= connected[smaller] * factors[lower - smaller]
            connected[lower] = value
        result[genus] = connected[degree]
    return result


def connected_1pt(degree, genus_max):
    """
    ⟨τ_{2g−2+2d}(pt)⟩°_d for g ≤ genus_max, by two independent routes.

    Raises:
        InvariantViolation: If the series and the factorization disagree
    """
    series = connected_1pt_series(degree, genus_max)
    factorized = connected_1pt_factorized(degree, genus_max)
    if series != factorized:
        raise InvariantViolation(
            f"connected one-point invariants disagree at degree {degree}: {series} vs {factorized}")
    return series


def elliptic_series(z, q_order):
    """
    tr q^{L_0} ∏ E(z_i) as a list of q-coefficients.

    The q^d coefficient is the stationary generating function of degree-d
    covers of an elliptic curve, where every partition has weight 1.
    """
    if q_order > ELLIPTIC_ORDER_LIMIT:
        raise ResourceError(f"order {q_order} exceeds the limit {ELLIPTIC_ORDER_LIMIT}")
    return trace_weighted(None, list(z), q_order)
