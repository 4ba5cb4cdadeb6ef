"""
Bessel functions of integer order by Miller's backward recurrence.

The recurrence J_{k−1} = (2k/a) J_k − J_{k+1} is stable downward, so values
are generated from an order well above the ones requested and normalized
with J_0 + 2 Σ J_{2k} = 1.
"""

import logging
import math

import numpy as np

from ...types import ArgumentError, DomainError

logger = logging.getLogger(__name__)

# Orders above this are refused.
MAX_ORDER = 100000

_RESCALE = 1e200


def _start_order(top, argument):
    base = max(top, int(math.ceil(argument)))
    start = base + 20 + int(10 * math.sqrt(base + 1))
    return start + (start % 2)


class BesselTable:
    """
    J_0(a), …, J_top(a) at one argument; negative orders by J_{−n} = (−1)^n J_n.

    Attributes:
        argument: The argument a ≥ 0
        values: numpy array of J_0..J_top
    """

    def __init__(self, argument, top):
        if argument < 0:
            raise ArgumentError(f"Bessel argument must be nonnegative, got {argument}")
        if top > MAX_ORDER:
            raise DomainError(f"Bessel order {top} exceeds {MAX_ORDER}")
        self.argument = float(argument)
        self.top = int(top)
        self.values = self._compute()

    def __repr__(self):
        return f"BesselTable(argument={self.argument}, top={self.top})"

    def _compute(self):
        a, top = self.argument, self.top
        if a == 0.0:
            values = np.zeros(top + 1)
            values[0] = 1.0
            return values
        start = _start_order(top, a)
        backward = np.zeros(start + 2)
        backward[start] = 1e-300
        for k in range(start, 0, -1):
            backward[k - 1] = (2 * k / a) * backward[k] - backward[k + 1]
            if abs(backward[k - 1]) > _RESCALE:
                backward[k - 1:] /= _RESCALE
        norm = backward[0] + 2 * backward[2::2].sum()
        logger.debug("Miller recurrence from order %d for a = %g", start, a)
        return backward[:top + 1] / norm

    def __call__(self, order):
        """J_order(a) for an integer or an integer array."""
        order = np.asarray(order, dtype=int)
        size = np.abs(order)
        if np.any(size > self.top):
            raise DomainError(f"order {int(size.max())} lies outside the table (top {self.top})")
        signs = np.where((order < 0) & (size % 2 == 1), -1.0, 1.0)
        result = signs * self.values[size]
        return float(result) if result.ndim == 0 else result


def bessel_j(order, argument):
    """J_order(argument) for integer order."""
    return BesselTable(argument, abs(int(order)))(order)
