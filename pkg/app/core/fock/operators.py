"""
Bosons α_n, the diagonal operator E(z) and words built from them.

α_n moves one particle of the configuration down by n (up by |n| for n < 0).
Signs follow the reordering of the semi-infinite wedge: a particle jumping
over an odd number of occupied sites picks up −1.
"""

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction

from ...types import ArgumentError, TruncationWarning
from ..partitions import Partition, e_coefficient, from_positions, power_series_E
from .vector import FockVector, vacuum

logger = logging.getLogger(__name__)

# Extra energy used to confirm that a vacuum expectation has stabilized.
STABILITY_MARGIN = 5

# Relative tolerance for the stability check of inexact expectations.
STABILITY_TOLERANCE = 1e-12


def alpha_terms(partition, n):
    """
    Expansion of α_n v_λ on the basis.

    Returns:
        List of (sign, μ)

    Raises:
        ArgumentError: If n = 0
    """
    if n == 0:
        raise ArgumentError("α_0 acts by zero on the charge-zero sector")
    count = len(partition) + abs(n)
    positions = partition.positions(count)
    occupied = set(positions)
    result = []
    for index, y in enumerate(positions):
        target = y - n
        # Below −count every site belongs to the filled sea.
        if target < -count or target in occupied:
            continue
        low, high = min(y, target), max(y, target)
        between = sum(1 for other in positions if low < other < high)
        moved = positions[:index] + [target] + positions[index + 1:]
        result.append((-1 if between % 2 else 1, from_positions(moved)))
    return result


def apply_alpha(n, vector):
    """
    α_n applied to a vector.

    Terms that leave the truncation are dropped and flagged on the result.

    Args:
        n: Nonzero integer
        vector: FockVector

    Returns:
        FockVector
    """
    merged = {}
    for partition, value in vector.items():
        for sign, image in alpha_terms(partition, n):
            merged[image] = merged.get(image, 0) + sign * value
    return vector.with_terms(merged)


def _apply_diagonal(vector, eigenvalue):
    return vector.with_terms({p: eigenvalue(p) * c for p, c in vector.items()})


def apply_E(z, vector):
    """
    E(z) applied to a vector: v_λ ↦ power_series_E(λ, z)·v_λ.

    Raises:
        PoleError: If e^z = 1
    """
    return _apply_diagonal(vector, lambda partition: power_series_E(partition, z))


def apply_E_coefficient(k, vector):
    """Diagonal action of the z^k coefficient of the E-eigenvalue (exact)."""
    return _apply_diagonal(vector, lambda partition: e_coefficient(k, partition))


def apply_exp(c, n, vector):
    """
    exp(c·α_{−n}) applied to a vector.

    The series terminates once every new term lies above the truncation.
    """
    if n <= 0:
        raise ArgumentError(f"exp(c·α_(−n)) needs positive n, got {n}")
    merged = dict(vector.coefficients)
    term = vector
    power = 0
    dropped = 0
    while len(term):
        power += 1
        scale = c * Fraction(1, power)
        raised = {}
        for partition, value in term.items():
            for sign, image in alpha_terms(partition, -n):
                raised[image] = raised.get(image, 0) + sign * value * scale
        term = FockVector(raised, vector.max_energy)
        dropped += term.dropped
        for partition, value in term.items():
            merged[partition] = merged.get(partition, 0) + value
    return vector.with_terms(merged, dropped)


@dataclass(frozen=True)
class Alpha:
    n: int

    def __post_init__(self):
        if self.n == 0:
            raise ArgumentError("Alpha(0) is not an operator of the word alphabet")

    def apply(self, vector):
        return apply_alpha(self.n, vector)


@dataclass(frozen=True)
class E:
    z: complex

    def apply(self, vector):
        return apply_E(self.z, vector)


@dataclass(frozen=True)
class ScalarExp:
    """exp(c·α_{−n})."""
    c: object
    n: int

    def apply(self, vector):
        return apply_exp(self.c, self.n, vector)


@dataclass(frozen=True)
class ECoefficient:
    """The z^k Taylor coefficient of E(z), a diagonal operator."""
    k: int

    def apply(self, vector):
        return apply_E_coefficient(self.k, vector)


class OperatorWord:
    """
    Product of atoms, written left to right and applied right to left.

    Attributes:
        atoms: Tuple of Alpha, E, ScalarExp or ECoefficient
    """

    __slots__ = ('atoms',)

    def __init__(self, atoms=()):
        atoms = tuple(atoms)
        for atom in atoms:
            if not isinstance(atom, (Alpha, E, ScalarExp, ECoefficient)):
                raise ArgumentError(f"not an operator atom: {atom!r}")
        self.atoms = atoms

    def __repr__(self):
        return f"OperatorWord({' '.join(map(repr, self.atoms)) or '1'})"

    def __len__(self):
        return len(self.atoms)

    def __mul__(self, other):
        return OperatorWord(self.atoms + other.atoms)


def apply_word(word, vector):
    """Apply the atoms of a word right to left."""
    for atom in reversed(word.atoms):
        vector = atom.apply(vector)
    return vector


def _vacuum_coefficient(word, max_energy):
    return apply_word(word, vacuum(max_energy))[Partition()]


def _close(a, b):
    if a == b:
        return True
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return False
    return abs(a - b) <= STABILITY_TOLERANCE * max(1.0, abs(a), abs(b))


def vacuum_expectation(word, max_energy):
    """
    ⟨word⟩ = (word·v_∅, v_∅) under the energy truncation.

    The computation is repeated with STABILITY_MARGIN more energy; if the two
    values disagree a TruncationWarning is issued and the value at the larger
    truncation is returned.

    Args:
        word: OperatorWord
        max_energy: Truncation energy E_max

    Returns:
        The v_∅ coefficient (exact when every input is exact)
    """
    value = _vacuum_coefficient(word, max_energy)
    check = _vacuum_coefficient(word, max_energy + STABILITY_MARGIN)
    if not _close(value, check):
        logger.warning("vacuum expectation unstable: %s at E_max=%d, %s at E_max=%d",
                       value, max_energy, check, max_energy + STABILITY_MARGIN)
        warnings.warn(f"vacuum expectation not stable under E_max {max_energy} -> "
                      f"{max_energy + STABILITY_MARGIN}", TruncationWarning, stacklevel=2)
        return check
    return value
