"""
Parsers for the textual values accepted on the command line.
"""

from fractions import Fraction

from ..core.kernels import lattice_index
from ..core.partitions import parse_partition
from ..types import ArgumentError


def parse_rational(text):
    """
    Parse an exact number: "3", "-1/2" or "0.25" (decimals are exact).

    Raises:
        ArgumentError: If the text is not a number
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ArgumentError(f"'{text}' is not a rational number") from None


def parse_real(text):
    """Parse a float, accepting fractions such as "1/3"."""
    return float(parse_rational(text))


def parse_complex(text):
    """Parse a complex number such as "0.5", "0.5+1j" or "-2j"."""
    try:
        return complex(text.strip().replace(' ', ''))
    except ValueError:
        raise ArgumentError(f"'{text}' is not a complex number") from None


def parse_integer(text):
    """Parse an integer."""
    try:
        return int(text.strip())
    except ValueError:
        raise ArgumentError(f"'{text}' is not an integer") from None


def parse_list(text, item=parse_rational):
    """
    Parse a comma-separated list; the empty string is the empty list.

    Args:
        text: e.g. "0.3,0.1"
        item: Parser applied to each entry
    """
    text = text.strip()
    if not text:
        return ()
    return tuple(item(entry) for entry in text.split(','))


def parse_half_integers(text):
    """
    Parse lattice points, either "−1/2,1/2,3/2" or an inclusive range "-5/2:5/2".

    Raises:
        ArgumentError: If an entry is not a half-integer
    """
    text = text.strip()
    if ':' in text:
        low, high = (parse_rational(part) for part in text.split(':', 1))
        start, stop = lattice_index(low), lattice_index(high)
        if stop < start:
            raise ArgumentError(f"empty range '{text}'")
        return tuple(Fraction(2 * y + 1, 2) for y in range(start, stop + 1))
    points = parse_list(text)
    for x in points:
        lattice_index(x)
    return points


def parse_branch(text):
    """Parse one branch class in the partition format, e.g. "2,1"."""
    partition = parse_partition(text)
    if partition.size == 0:
        raise ArgumentError("a branch class cannot be empty")
    return partition
