"""Shared types and enums used across modules."""

from dataclasses import dataclass, field
from enum import Enum


class Command(str, Enum):
    """CLI subcommands."""
    ENUMERATE = 'enumerate'
    DIM = 'dim'
    MEASURE_TABLE = 'measure-table'
    SAMPLE = 'sample'
    CORRELATE = 'correlate'
    GAP = 'gap'
    KERNEL = 'kernel'
    LIMIT_SHAPE = 'limit-shape'
    HOOK_ENERGY = 'hook-energy'
    MAXIMIZE = 'maximize'
    SW_SHAPE = 'sw-shape'
    GW = 'gw'
    HURWITZ = 'hurwitz'
    ELLIPTIC_TRACE = 'elliptic-trace'


class OutputFormat(str, Enum):
    """Serialization of emitted tables."""
    CSV = 'csv'
    JSON = 'json'


class Precision(str, Enum):
    """Arithmetic mode of a run."""
    EXACT = 'exact'
    FLOAT = 'float'


# Subcommands whose results are floating point by nature.
FLOAT_ONLY = frozenset({
    Command.CORRELATE,
    Command.GAP,
    Command.KERNEL,
    Command.LIMIT_SHAPE,
    Command.HOOK_ENERGY,
    Command.MAXIMIZE,
    Command.SW_SHAPE,
    Command.ELLIPTIC_TRACE,
})


class PartitionsError(Exception):
    """Base class of every error raised by this package."""


class ArgumentError(PartitionsError, ValueError):
    """Invalid arguments or violated preconditions."""


class ResourceError(PartitionsError, RuntimeError):
    """A configured size or cost limit was exceeded."""


class DomainError(PartitionsError, ValueError):
    """Input lies outside the domain where a formula applies."""


class PoleError(PartitionsError, ZeroDivisionError):
    """Evaluation hit a pole (e^z = 1 for the E-operator)."""


class NumericError(PartitionsError, ArithmeticError):
    """
    A numerical method failed to converge.

    Attributes:
        diagnostics: Mapping with solver state at the point of failure
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class InvariantViolation(PartitionsError, AssertionError):
    """An identity that must hold exactly was found broken."""


class TruncationWarning(UserWarning):
    """A truncated computation did not stabilize."""


class DegenerateLevelWarning(UserWarning):
    """A level coincides with a critical value of g."""


# Name and version recorded in every output file.
TOOL_NAME = 'rpart'
VERSION = '0.2.0'

# Exit codes of the command-line tool.
EXIT_OK = 0
EXIT_ARGUMENT = 2
EXIT_NUMERIC = 3


def exit_code_for(error):
    """Map an exception to the CLI exit code."""
    if isinstance(error, (NumericError, PoleError, InvariantViolation)):
        return EXIT_NUMERIC
    return EXIT_ARGUMENT


@dataclass(frozen=True)
class RunConfig:
    """
    Fully resolved description of one CLI run.

    Attributes:
        command: Subcommand to execute
        params: Typed per-subcommand parameters
        seed: Seed for every random draw of the run
        out: Output path, or None for stdout
        fmt: Output serialization
        precision: Exact or floating arithmetic
        verbose: Enable debug logging
    """
    command: Command
    params: dict = field(default_factory=dict)
    seed: int = 0
    out: str = None
    fmt: OutputFormat = OutputFormat.CSV
    precision: Precision = Precision.EXACT
    verbose: bool = False


class Table:
    """
    Result of a subcommand.

    Attributes:
        columns: Column names
        rows: List of row tuples, aligned with columns
        diagnostics: Extra metadata (solver iterations, residuals, tail bounds)
    """

    def __init__(self, columns, rows, diagnostics=None):
        self.columns = list(columns)
        self.rows = [tuple(row) for row in rows]
        self.diagnostics = dict(diagnostics or {})

    def __repr__(self):
        return f"Table(columns={self.columns}, rows={len(self.rows)})"

    def __len__(self):
        return len(self.rows)

    def __bool__(self):
        return bool(self.rows)
