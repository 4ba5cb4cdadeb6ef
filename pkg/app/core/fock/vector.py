"""Vectors of the truncated charge-zero Fock space."""

from ...types import ArgumentError
from ..partitions import Partition

# Default energy bound for vectors built without an explicit one.
DEFAULT_MAX_ENERGY = 20


class FockVector:
    """
    Finite combination Σ c_λ v_λ with |λ| ≤ max_energy.

    The basis v_λ is orthonormal. Terms above max_energy are dropped on
    construction; `truncated` records that this happened and `dropped`
    accumulates the squared norm of what was lost.

    Attributes:
        coefficients: Mapping Partition -> nonzero coefficient
        max_energy: Truncation energy E_max
        truncated: True if any term was dropped
        dropped: Squared norm of the dropped terms
    """

    __slots__ = ('coefficients', 'max_energy', 'truncated', 'dropped')

    def __init__(self, coefficients=None, max_energy=DEFAULT_MAX_ENERGY,
                 truncated=False, dropped=0):
        kept = {}
        for partition, value in (coefficients or {}).items():
            if value == 0:
                continue
            if partition.size > max_energy:
                truncated = True
                dropped += abs(value) ** 2
                continue
            kept[partition] = value
        self.coefficients = kept
        self.max_energy = max_energy
        self.truncated = truncated
        self.dropped = dropped

    def __repr__(self):
        terms = ', '.join(f"{c}·v{p.parts}" for p, c in sorted(self.coefficients.items()))
        return f"FockVector({terms or '0'})"

    def __getitem__(self, partition):
        return self.coefficients.get(partition, 0)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def items(self):
        return self.coefficients.items()

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.coefficients == other.coefficients

    def _combine(self, other, sign):
        if not isinstance(other, FockVector):
            return NotImplemented
        merged = dict(self.coefficients)
        for partition, value in other.items():
            merged[partition] = merged.get(partition, 0) + sign * value
        return FockVector(merged, min(self.max_energy, other.max_energy),
                          self.truncated or other.truncated, self.dropped + other.dropped)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, scalar):
        return FockVector({p: scalar * c for p, c in self.items()}, self.max_energy,
                          self.truncated, abs(scalar) ** 2 * self.dropped)

    __rmul__ = __mul__

    def __neg__(self):
        return -1 * self

    def norm_squared(self):
        """Σ |c_λ|²."""
        return sum(abs(c) ** 2 for c in self.coefficients.values())

    def with_terms(self, coefficients, dropped=0):
        """A vector with the same truncation carrying new coefficients."""
        return FockVector(coefficients, self.max_energy, self.truncated or dropped != 0,
                          self.dropped + dropped)


def vacuum(max_energy=DEFAULT_MAX_ENERGY):
    """The vacuum v_∅."""
    return FockVector({Partition(): 1}, max_energy)


def basis_vector(partition, max_energy=None):
    """The basis vector v_λ."""
    max_energy = partition.size if max_energy is None else max_energy
    if partition.size > max_energy:
        raise ArgumentError(f"|λ| = {partition.size} exceeds the truncation {max_energy}")
    return FockVector({partition: 1}, max_energy)


def inner(u, v):
    """(u, v) = Σ c_λ(u) conj(c_λ(v)); linear in the first slot."""
    total = 0
    for partition, value in u.items():
        other = v[partition]
        if other != 0:
            total += value * (other.conjugate() if isinstance(other, complex) else other)
    return total
