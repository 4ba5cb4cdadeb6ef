"""
Partitions, their fermionic coordinates, and growth moves.

A partition is stored as a tuple of weakly decreasing positive parts. The
particle map sends λ to the half-integers λ_i − i + 1/2; away from a finite
window these fill every negative site (the Dirac sea).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ...types import ArgumentError, InvariantViolation, ResourceError

HALF = Fraction(1, 2)

# Largest n for which enumerate_partitions materializes every partition.
ENUMERATION_LIMIT = 60


class Partition:
    """
    A weakly decreasing sequence of positive integers.

    Trailing zeros are accepted on input and dropped.
    """

    __slots__ = ('parts', 'size')

    def __init__(self, parts=()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise ArgumentError(f"parts must be nonnegative integers: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ArgumentError(f"parts must be weakly decreasing: {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts
        self.size = sum(parts)

    def __hash__(self):
        return hash(self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"{type(self).__name__}({self.parts!r})"

    def __str__(self):
        return format_partition(self)

    def part(self, i):
        """The i-th part (1-based), zero past the length."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def cells(self):
        """Iterate over cells (row, col), 1-based, row by row."""
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield (row, col)

    def positions(self, count=None):
        """
        Integer particle positions λ_i − i for i = 1..count.

        The half-integer coordinate of the i-th particle is this value plus 1/2.
        """
        count = len(self.parts) if count is None else count
        return [self.part(i) - i for i in range(1, count + 1)]


class CycleType(Partition):
    """A partition η of d read as a conjugacy class of S(d)."""

    __slots__ = ()

    def multiplicities(self):
        """Map part -> number of occurrences."""
        counts = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def centralizer_order(self):
        """z_η = ∏ m_i! i^{m_i}."""
        order = 1
        for p, m in self.multiplicities().items():
            order *= factorial(m) * p ** m
        return order

    def class_size(self):
        """|C_η| = d!/z_η."""
        return factorial(self.size) // self.centralizer_order()


@dataclass(frozen=True)
class ParticleSet:
    """
    Finite excitation of the Dirac sea.

    Attributes:
        positives: Occupied positive half-integers, increasing
        negative_holes: Empty negative half-integers, increasing
    """
    positives: tuple = ()
    negative_holes: tuple = ()

    def is_balanced(self):
        return len(self.positives) == len(self.negative_holes)

    def __contains__(self, x):
        x = Fraction(x)
        if x > 0:
            return x in self.positives
        return x not in self.negative_holes


def parse_partition(text):
    """
    Parse the comma-separated text format ("8,5,4,2,2,1"; "" is ∅).

    Raises:
        ArgumentError: If the text is not a partition
    """
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(piece) for piece in text.split(',')]
    except ValueError:
        raise ArgumentError(f"invalid partition text: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ArgumentError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(partition):
    """Render a partition in the comma-separated text format."""
    return ','.join(str(p) for p in partition.parts)


def enumerate_partitions(n, limit=ENUMERATION_LIMIT):
    """
    All partitions of n in reverse lexicographic order.

    Args:
        n: Nonnegative integer
        limit: Largest n accepted

    Returns:
        List of Partition, starting with (n) and ending with (1,…,1)

    Raises:
        ResourceError: If n exceeds the limit
    """
    if n < 0:
        raise ArgumentError(f"n must be nonnegative, got {n}")
    if n > limit:
        raise ResourceError(f"enumeration of partitions of {n} exceeds the limit {limit}")
    return [Partition(parts) for parts in _partitions_bounded(n, n)]


@lru_cache(maxsize=None)
def _partitions_bounded(n, largest):
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions_up_to(n, limit=ENUMERATION_LIMIT):
    """All partitions of size 0..n, grouped by size in increasing order."""
    for size in range(n + 1):
        yield from enumerate_partitions(size, limit=limit)


@lru_cache(maxsize=None)
def partition_count(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def transpose(partition):
    """Conjugate partition (rows and columns exchanged)."""
    parts = partition.parts
    if not parts:
        return type(partition)()
    return type(partition)(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def grow(partition):
    """Every partition obtained by adding one box, top row first."""
    parts = partition.parts
    result = []
    for i in range(len(parts) + 1):
        current = parts[i] if i < len(parts) else 0
        if i == 0 or parts[i - 1] > current:
            new = list(parts)
            if i < len(parts):
                new[i] += 1
            else:
                new.append(1)
            result.append(Partition(new))
    return result


def shrink(partition):
    """Every partition obtained by removing one box, top row first."""
    parts = partition.parts
    result = []
    for i in range(len(parts)):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if parts[i] > below:
            new = list(parts)
            new[i] -= 1
            result.append(Partition(new))
    return result


def contents(partition):
    """Contents col − row of all cells."""
    return [col - row for row, col in partition.cells()]


def particles(partition):
    """
    The particle configuration 𝔖(λ) as positives and negative holes.

    Returns:
        ParticleSet with balanced positives and holes
    """
    length = len(partition)
    occupied = {Fraction(y) + HALF for y in partition.positions()}
    positives = tuple(sorted(x for x in occupied if x > 0))
    holes = tuple(sorted(Fraction(-i) + HALF for i in range(1, length + 1)
                         if Fraction(-i) + HALF not in occupied))
    return ParticleSet(positives, holes)


def from_particles(particle_set):
    """
    Inverse of particles().

    Raises:
        InvariantViolation: If positives and holes are unbalanced or malformed
    """
    if not particle_set.is_balanced():
        raise InvariantViolation(
            f"unbalanced particle set: {len(particle_set.positives)} positives, "
            f"{len(particle_set.negative_holes)} holes")
    positives = [Fraction(x) for x in particle_set.positives]
    holes = {Fraction(x) for x in particle_set.negative_holes}
    for x in positives:
        if x <= 0 or (x - HALF).denominator != 1:
            raise InvariantViolation(f"positive particle {x} is not a positive half-integer")
    for x in holes:
        if x >= 0 or (x - HALF).denominator != 1:
            raise InvariantViolation(f"hole {x} is not a negative half-integer")
    depth = int(-min(holes) + HALF) if holes else 0
    negatives = [Fraction(-i) + HALF for i in range(1, depth + 1)
                 if Fraction(-i) + HALF not in holes]
    occupied = sorted(positives, reverse=True) + negatives
    parts = [int(x - HALF) + i for i, x in enumerate(occupied, start=1)]
    return Partition(parts)


def from_positions(positions):
    """
    Build a partition from integer positions of its first particles.

    Args:
        positions: Distinct integers y_i (any order); the sea below them is
            assumed filled

    Returns:
        Partition with λ_i = y_(i) + i for the decreasingly sorted positions
    """
    ordered = sorted(positions, reverse=True)
    return Partition([y + i for i, y in enumerate(ordered, start=1)])
