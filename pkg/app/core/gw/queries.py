"""Queries for Gromov-Witten and Hurwitz partition sums."""

from dataclasses import dataclass

from ...types import ArgumentError
from ..partitions import CycleType

# Largest degree for the stationary partition sums.
GW_DEGREE_LIMIT = 14

# Largest number of τ_k(pt) insertions.
INSERTION_LIMIT = 4

# Largest degree and branch-point count for Burnside's formula.
HURWITZ_DEGREE_LIMIT = 10
BRANCH_POINT_LIMIT = 6


def _nonnegative(value, name):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ArgumentError(f"{name} must be a nonnegative integer, got {value!r}")
    return value


@dataclass(frozen=True)
class GWQuery:
    """
    ⟨τ_{k_1}(pt) … τ_{k_n}(pt)⟩_d for a target of genus g_X.

    Attributes:
        degree: d ≥ 0
        insertions: Descendent orders k_i ≥ 0
        target_genus: g_X ≥ 0
    """
    degree: int
    insertions: tuple = ()
    target_genus: int = 0

    def __post_init__(self):
        _nonnegative(self.degree, 'degree')
        _nonnegative(self.target_genus, 'target genus')
        insertions = tuple(self.insertions)
        for k in insertions:
            _nonnegative(k, 'insertion order')
        object.__setattr__(self, 'insertions', insertions)

    def domain_genus(self):
        """
        g with Σk_i = 2d + 2g − 2 on a genus-zero target, or None.

        None when the dimension constraint has no nonnegative integer solution.
        """
        excess = sum(self.insertions) - 2 * self.degree + 2
        if excess < 0 or excess % 2:
            return None
        return excess // 2


@dataclass(frozen=True)
class HurwitzQuery:
    """
    Degree-d covers of a genus g_X surface with prescribed monodromy classes.

    Attributes:
        degree: d ≥ 1
        base_genus: g_X ≥ 0
        branch_data: CycleTypes η^(i), each a partition of d
    """
    degree: int
    base_genus: int = 0
    branch_data: tuple = ()

    def __post_init__(self):
        if _nonnegative(self.degree, 'degree') < 1:
            raise ArgumentError("a cover needs degree at least 1")
        _nonnegative(self.base_genus, 'base genus')
        branch = tuple(eta if isinstance(eta, CycleType) else CycleType(eta) for eta in self.branch_data)
        for eta in branch:
            if eta.size != self.degree:
                raise ArgumentError(f"branch class {eta.parts} is not a partition of {self.degree}")
        object.__setattr__(self, 'branch_data', branch)
