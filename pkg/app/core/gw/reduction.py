"""Exact sums over the partitions of a degree, serial or split across threads."""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from ...types import ArgumentError
from ..partitions import enumerate_partitions

logger = logging.getLogger(__name__)


def _chunk_sum(term, chunk):
    total = Fraction(0)
    for partition in chunk:
        total += term(partition)
    return total


def partition_sum(term, degree, workers=None):
    """
    Σ_{|λ|=degree} term(λ) with exact rational reduction.

    Args:
        term: Callable mapping a Partition to an exact rational
        degree: Size of the partitions summed over
        workers: None or 1 for a serial loop; otherwise the partitions are
            dealt round-robin into this many chunks summed on a thread pool

    Returns:
        Fraction, identical for every worker count

    Raises:
        ArgumentError: If workers is not a positive integer
    """
    partitions = list(enumerate_partitions(degree))
    if workers is None or workers == 1:
        return _chunk_sum(term, partitions)
    if not isinstance(workers, int) or workers < 1:
        raise ArgumentError(f"workers must be a positive integer, got {workers!r}")
    chunks = [partitions[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        partials = list(executor.map(lambda chunk: _chunk_sum(term, chunk), chunks))
    logger.debug("partition sum of degree %d over %d chunks", degree, workers)
    return sum(partials, Fraction(0))
