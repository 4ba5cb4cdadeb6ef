"""Plancherel sampling through Robinson-Schensted row insertion."""

import logging
from bisect import bisect_left

import numpy as np
from scipy.stats import poisson

from ...types import ArgumentError, ResourceError
from ..partitions import Partition

logger = logging.getLogger(__name__)

# Largest permutation size the samplers accept.
SAMPLE_LIMIT = 10 ** 6


def make_rng(seed):
    """A numpy Generator from a seed, or the generator itself."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def longest_increasing_subsequence(sequence):
    """Length of the longest strictly increasing subsequence (patience sorting)."""
    tops = []
    for value in sequence:
        index = bisect_left(tops, value)
        if index == len(tops):
            tops.append(value)
        else:
            tops[index] = value
    return len(tops)


def rsk_insert(rows, value):
    """Row-insert a value into a tableau stored as a list of increasing rows."""
    for row in rows:
        index = bisect_left(row, value)
        if index == len(row):
            row.append(value)
            return
        row[index], value = value, row[index]
    rows.append([value])


def rsk_tableau(permutation):
    """The insertion tableau P of a sequence of distinct values."""
    rows = []
    for value in permutation:
        rsk_insert(rows, value)
    return rows


def rsk_shape(permutation):
    """Common shape of the RSK tableaux of a permutation."""
    return Partition([len(row) for row in rsk_tableau(permutation)])


def random_permutation(n, rng):
    """Uniform permutation of 1..n from the generator."""
    return rng.permutation(n) + 1


def _check_size(n):
    if n < 0:
        raise ArgumentError(f"n must be nonnegative, got {n}")
    if n > SAMPLE_LIMIT:
        raise ResourceError(f"sample size {n} exceeds the limit {SAMPLE_LIMIT}")


def sample_plancherel(n, seed):
    """
    Draw λ from the Plancherel measure on partitions of n.

    Args:
        n: Size, at most SAMPLE_LIMIT
        seed: Integer seed or numpy Generator

    Returns:
        RSK shape of a uniform random permutation
    """
    _check_size(n)
    rng = make_rng(seed)
    return rsk_shape(random_permutation(n, rng).tolist())


def sample_poissonized(xi, seed):
    """
    Draw λ from the poissonized Plancherel measure.

    n is drawn first by Poisson inversion of one uniform from the generator.
    """
    if not xi > 0:
        raise ArgumentError(f"ξ must be positive, got {xi}")
    rng = make_rng(seed)
    n = int(poisson.ppf(rng.random(), float(xi)))
    logger.debug("poissonized sample: n = %d for ξ = %s", n, xi)
    _check_size(n)
    return sample_plancherel(n, rng)
