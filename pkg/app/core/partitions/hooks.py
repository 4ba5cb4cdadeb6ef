"""Hook geometry and the dimension of irreducible representations."""

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from ...types import ArgumentError
from .partition import shrink, transpose


def hook_arm_leg(partition, cell):
    """
    Hook length, arm and leg of a cell.

    Args:
        partition: The diagram
        cell: (row, col), 1-based

    Returns:
        (h, a, l) with h = 1 + a + l

    Raises:
        ArgumentError: If the cell lies outside the diagram
    """
    row, col = cell
    if row < 1 or col < 1 or row > len(partition) or col > partition.part(row):
        raise ArgumentError(f"cell {cell} is outside the diagram {partition.parts}")
    arm = partition.part(row) - col
    leg = transpose(partition).part(col) - row
    return (1 + arm + leg, arm, leg)


def arms_and_legs(partition):
    """Yield (arm, leg) for every cell, row by row."""
    columns = transpose(partition)
    for row, col in partition.cells():
        yield partition.part(row) - col, columns.part(col) - row


def hook_lengths(partition):
    """All hook lengths, row by row."""
    return [1 + a + l for a, l in arms_and_legs(partition)]


@lru_cache(maxsize=None)
def dimension(partition):
    """
    Dimension of the irreducible representation λ of S(|λ|).

    Computed by the hook-length formula; debug builds recompute it via the
    Frobenius formula for |λ| ≤ 20 and by counting growth paths for |λ| ≤ 8.
    """
    result = factorial(partition.size) // prod(hook_lengths(partition))
    assert partition.size > 20 or result == dimension_frobenius(partition)
    assert partition.size > 8 or result == count_growth_paths(partition)
    return result


def dimension_frobenius(partition, k=None):
    """
    dim λ = |λ|!·∏_{i<j}(x_i − x_j)/∏ x_i! with x_i = λ_i + k − i.

    Args:
        partition: The diagram
        k: Any integer ≥ ℓ(λ); defaults to ℓ(λ)

    Raises:
        ArgumentError: If k is smaller than the number of rows
    """
    length = len(partition)
    k = length if k is None else k
    if k < length:
        raise ArgumentError(f"k = {k} is smaller than the number of rows {length}")
    xs = [partition.part(i) + k - i for i in range(1, k + 1)]
    value = Fraction(factorial(partition.size))
    for i in range(k):
        for j in range(i + 1, k):
            value *= xs[i] - xs[j]
        value /= factorial(xs[i])
    assert value.denominator == 1
    return int(value)


@lru_cache(maxsize=None)
def count_growth_paths(partition):
    """Number of ways to grow ∅ into λ one box at a time."""
    if partition.size == 0:
        return 1
    return sum(count_growth_paths(smaller) for smaller in shrink(partition))


def dimension_ratio(partition):
    """dim λ / |λ|! = 1/∏ h(□), exact."""
    return Fraction(1, prod(hook_lengths(partition)))
