"""Schur functions and the measures induced by Fock vectors."""

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from ...types import ArgumentError
from .operators import apply_exp
from .vector import vacuum


def schur_vector(t, max_energy):
    """
    exp(Σ t_n α_{−n}) v_∅ truncated at max_energy.

    Its v_λ coefficient is s_λ(t) for every |λ| ≤ max_energy.

    Args:
        t: Sequence t_1, t_2, … (finitely supported)
        max_energy: Truncation energy
    """
    vector = vacuum(max_energy)
    for n, value in enumerate(t, start=1):
        if value != 0:
            vector = apply_exp(value, n, vector)
    return vector


def schur_function(partition, t):
    """s_λ(t), exact for exact t."""
    return schur_vector(t, partition.size)[partition]


def complete_homogeneous(t, degree):
    """h_0..h_degree from exp(Σ t_k z^k) = Σ h_n z^n."""
    h = [Fraction(1)]
    for n in range(1, degree + 1):
        total = sum(k * t[k - 1] * h[n - k] for k in range(1, min(n, len(t)) + 1))
        h.append(total * Fraction(1, n))
    return h


def _to_sympy(value):
    if isinstance(value, (int, Fraction)):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.sympify(value)


def _from_sympy(value):
    if value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    return complex(value)


def jacobi_trudi(partition, t):
    """
    s_λ(t) = det[h_{λ_i − i + j}] over ℓ(λ) × ℓ(λ).

    Independent of the Fock expansion; used as a cross-check.
    """
    length = len(partition)
    if length == 0:
        return Fraction(1)
    h = complete_homogeneous(t, partition.part(1) + length)

    def entry(i, j):
        index = partition.part(i + 1) - (i + 1) + (j + 1)
        return _to_sympy(h[index]) if index >= 0 else sympy.Integer(0)

    matrix = sympy.Matrix(length, length, entry)
    return _from_sympy(sympy.expand(matrix.det(method='bareiss')))


@dataclass
class VectorMeasure:
    """
    Probability measure |(v, v_λ)|²/‖v‖².

    Attributes:
        probabilities: Mapping Partition -> probability
        deficit: Squared norm dropped by truncation, relative to ‖v‖²
    """
    probabilities: dict = field(default_factory=dict)
    deficit: object = 0

    def __getitem__(self, partition):
        return self.probabilities.get(partition, 0)

    def __len__(self):
        return len(self.probabilities)

    def total(self):
        return sum(self.probabilities.values())


def measure_from_vector(vector):
    """
    The measure induced by a vector.

    Raises:
        ArgumentError: If the vector is zero
    """
    norm = vector.norm_squared()
    if norm == 0:
        raise ArgumentError("a zero vector induces no measure")
    if isinstance(norm, int):
        norm = Fraction(norm)
    probabilities = {p: abs(c) ** 2 / norm for p, c in vector.items()}
    return VectorMeasure(probabilities, vector.dropped / norm)
