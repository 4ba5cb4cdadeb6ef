"""Parameters of the measures on partitions."""

from dataclasses import dataclass
from fractions import Fraction

from ...types import ArgumentError


def _conjugate(value):
    return value.conjugate() if isinstance(value, complex) else value


def _trim(values):
    values = tuple(values)
    while values and values[-1] == 0:
        values = values[:-1]
    return values


@dataclass(frozen=True)
class Plancherel:
    """(dim λ)²/n! on partitions of n."""
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError(f"n must be nonnegative, got {self.n}")


@dataclass(frozen=True)
class PoissonizedPlancherel:
    """e^{−ξ} ξ^{|λ|} (dim λ/|λ|!)² on all partitions."""
    xi: object

    def __post_init__(self):
        if not self.xi > 0:
            raise ArgumentError(f"ξ must be positive, got {self.xi}")


@dataclass(frozen=True)
class Schur:
    """
    s_λ(t) s_λ(t̄) / Z with Z = exp(Σ k t_k t̄_k).

    Attributes:
        t: Coefficients t_1, t_2, … (finitely supported)
        tbar: Coefficients t̄_1, t̄_2, …
    """
    t: tuple = ()
    tbar: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 't', _trim(self.t))
        object.__setattr__(self, 'tbar', _trim(self.tbar))

    @property
    def positive(self):
        """True when t̄ is the complex conjugate of t, which makes every weight ≥ 0."""
        return self.tbar == tuple(_conjugate(value) for value in self.t)

    @property
    def formal(self):
        return not self.positive


@dataclass(frozen=True)
class Jack:
    """
    ∏ 1/(((1+a)ε1 + lε2)(aε1 + (1+l)ε2)) on partitions of d.

    Normalized by d!(ε1ε2)^d.
    """
    eps1: object
    eps2: object
    d: int

    def __post_init__(self):
        if self.eps1 * self.eps2 == 0:
            raise ArgumentError("Jack parameters need ε1·ε2 ≠ 0")
        if self.d < 0:
            raise ArgumentError(f"d must be nonnegative, got {self.d}")


@dataclass(frozen=True)
class PeriodicPlancherel:
    """
    ξ^{|λ|} exp(U(λ)/ħ) (dim λ/|λ|!)², unnormalized.

    Attributes:
        u: Potential values u_{1/2}, …, u_{N−1/2}, summing to zero
        xi: ξ > 0
        hbar: ħ > 0
    """
    u: tuple
    xi: object
    hbar: object

    def __post_init__(self):
        u = tuple(Fraction(v) if isinstance(v, int) else v for v in self.u)
        object.__setattr__(self, 'u', u)
        if not u:
            raise ArgumentError("the potential needs a period N ≥ 1")
        if sum(u) != 0:
            raise ArgumentError(f"potential values must sum to zero, got {sum(u)}")
        if not self.xi > 0 or not self.hbar > 0:
            raise ArgumentError("ξ and ħ must be positive")

    @property
    def period(self):
        return len(self.u)
