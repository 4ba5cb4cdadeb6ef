"""Hurwitz numbers: Burnside's character formula and a permutation count."""

import itertools
import logging
from collections import Counter
from fractions import Fraction
from math import factorial

from ...types import ResourceError
from ..partitions import central_character, dimension
from .queries import BRANCH_POINT_LIMIT, HURWITZ_DEGREE_LIMIT
from .reduction import partition_sum

logger = logging.getLogger(__name__)

# Largest degree for the permutation count.
BRUTE_DEGREE_LIMIT = 5

# Largest number of tuples the permutation count may stand for.
HURWITZ_ENUMERATION_LIMIT = 10 ** 8


def hurwitz_count(query, workers=None):
    """
    Automorphism-weighted count of possibly disconnected covers.

    Σ_{|λ|=d} (dim λ/d!)^{2−2g_X} ∏ f_{η^(i)}(λ)

    Args:
        query: HurwitzQuery
        workers: Thread count for the partition sum, serial by default

    Returns:
        Exact rational

    Raises:
        ResourceError: Beyond HURWITZ_DEGREE_LIMIT or BRANCH_POINT_LIMIT
    """
    if query.degree > HURWITZ_DEGREE_LIMIT:
        raise ResourceError(f"degree {query.degree} exceeds the limit {HURWITZ_DEGREE_LIMIT}")
    if len(query.branch_data) > BRANCH_POINT_LIMIT:
        raise ResourceError(
            f"{len(query.branch_data)} branch points exceed the limit {BRANCH_POINT_LIMIT}")
    exponent = 2 - 2 * query.base_genus
    scale = factorial(query.degree)

    def term(partition):
        value = Fraction(dimension(partition), scale) ** exponent
        for eta in query.branch_data:
            value *= central_character(eta, partition)
        return value

    return partition_sum(term, query.degree, workers)


def _compose(p, q):
    """(p∘q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def _inverse(p):
    result = [0] * len(p)
    for i, image in enumerate(p):
        result[image] = i
    return tuple(result)


def cycle_type(permutation):
    """Cycle lengths of a permutation of 0..d−1, decreasing."""
    seen = set()
    lengths = []
    for start in range(len(permutation)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = permutation[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _convolve(distribution, factors):
    result = Counter()
    for product, count in distribution.items():
        for factor in factors:
            result[_compose(product, factor)] += count
    return result


def hurwitz_brute(query):
    """
    Hurwitz number by counting monodromy tuples.

    Counts (a_1, b_1, …, a_g, b_g, σ_1, …, σ_n) in S(d) with
    ∏[a_j, b_j]·∏σ_i = 1 and σ_i in the class η^(i), divided by d!. Partial
    products are aggregated in a Counter, one factor at a time.

    Raises:
        ResourceError: If d exceeds BRUTE_DEGREE_LIMIT or the tuple count
            exceeds HURWITZ_ENUMERATION_LIMIT
    """
    d = query.degree
    if d > BRUTE_DEGREE_LIMIT:
        raise ResourceError(f"degree {d} exceeds the enumeration limit {BRUTE_DEGREE_LIMIT}")
    group = list(itertools.permutations(range(d)))
    classes = {}
    for sigma in group:
        classes.setdefault(cycle_type(sigma), []).append(sigma)
    members = [classes.get(eta.parts, []) for eta in query.branch_data]
    tuples = len(group) ** (2 * query.base_genus)
    for factors in members:
        tuples *= len(factors)
    if tuples > HURWITZ_ENUMERATION_LIMIT:
        raise ResourceError(f"{tuples} tuples exceed the enumeration limit {HURWITZ_ENUMERATION_LIMIT}")

    identity = tuple(range(d))
    commutators = Counter(
        _compose(_compose(a, b), _compose(_inverse(a), _inverse(b)))
        for a in group for b in group)
    distribution = Counter({identity: 1})
    for _ in range(query.base_genus):
        result = Counter()
        for product, count in distribution.items():
            for commutator, multiplicity in commutators.items():
                result[_compose(product, commutator)] += count * multiplicity
        distribution = result
    for factors in members:
        distribution = _convolve(distribution, factors)
    logger.debug("hurwitz_brute: %d tuples, %d distinct products", tuples, len(distribution))
    return Fraction(distribution[identity], factorial(d))
