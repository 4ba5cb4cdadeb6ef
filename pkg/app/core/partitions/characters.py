"""Irreducible characters of S(d) and central characters."""

from fractions import Fraction
from functools import lru_cache

from ...types import ArgumentError
from .hooks import dimension
from .partition import CycleType, from_positions


def remove_strips(partition, length):
    """
    All ways to remove a border strip of the given length.

    A strip removal moves one particle down by `length` onto an empty site;
    the sign is (−1)^(occupied sites strictly between).

    Returns:
        List of (sign, smaller partition)
    """
    positions = partition.positions()
    occupied = set(positions)
    floor = -len(partition)
    result = []
    for index, y in enumerate(positions):
        target = y - length
        if target < floor or target in occupied:
            continue
        between = sum(1 for other in positions if target < other < y)
        moved = positions[:index] + [target] + positions[index + 1:]
        result.append((-1 if between % 2 else 1, from_positions(moved)))
    return result


@lru_cache(maxsize=None)
def character(partition, cycle_type):
    """
    χ^λ(η) by the Murnaghan-Nakayama rule.

    Raises:
        ArgumentError: If |η| ≠ |λ|
    """
    if partition.size != cycle_type.size:
        raise ArgumentError(
            f"class {cycle_type.parts} and representation {partition.parts} differ in size")
    if partition.size == 0:
        return 1
    first, rest = cycle_type.parts[0], CycleType(cycle_type.parts[1:])
    return sum(sign * character(smaller, rest) for sign, smaller in remove_strips(partition, first))


def central_character(cycle_type, partition):
    """
    f_η(λ) = |C_η| χ^λ(η) / dim λ, the eigenvalue of the class sum of η on λ.

    Returns:
        Exact rational
    """
    cycle_type = cycle_type if isinstance(cycle_type, CycleType) else CycleType(cycle_type.parts)
    chi = character(partition, cycle_type)
    return Fraction(cycle_type.class_size() * chi, dimension(partition))
