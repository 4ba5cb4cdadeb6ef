"""
Command-line grammar: global flags shared by every subcommand plus the
per-subcommand flags, resolved into a RunConfig.
"""

import argparse

from ..commands.subcommands import command_docs
from ..core.shapes import REFINEMENT_TOLERANCE
from ..types import (
    FLOAT_ONLY,
    ArgumentError,
    Command,
    OutputFormat,
    Precision,
    RunConfig,
)
from .values import (
    parse_branch,
    parse_complex,
    parse_half_integers,
    parse_integer,
    parse_list,
    parse_rational,
    parse_real,
)

PROG = 'rpart'

_GLOBAL_KEYS = ('command', 'seed', 'out', 'format', 'precision', 'verbose')


def _typed(parser):
    """Adapt a value parser to argparse, which reports ArgumentTypeError as usage errors."""
    def convert(text):
        try:
            return parser(text)
        except ArgumentError as e:
            raise argparse.ArgumentTypeError(str(e)) from None
    convert.__name__ = parser.__name__.replace('parse_', '')
    return convert


def _listed(item):
    def parse(text):
        return parse_list(text, item)
    parse.__name__ = f"{item.__name__}_list"
    return parse


_INT = _typed(parse_integer)
_RATIONAL = _typed(parse_rational)
_REAL = _typed(parse_real)
_RATIONALS = _typed(_listed(parse_rational))
_REALS = _typed(_listed(parse_real))
_INTS = _typed(_listed(parse_integer))
_COMPLEXES = _typed(_listed(parse_complex))
_POINTS = _typed(parse_half_integers)
_BRANCH = _typed(parse_branch)


def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=_INT, default=0, help="seed of every random draw (default 0)")
    common.add_argument('--out', default=None, help="write to this file instead of stdout")
    common.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument('--exact', dest='precision', action='store_const', const=Precision.EXACT.value)
    mode.add_argument('--float', dest='precision', action='store_const', const=Precision.FLOAT.value)
    common.add_argument('--verbose', action='store_true', help="log solver progress to stderr")
    return common


def _add_kernel_flags(sub, kernels):
    sub.add_argument('--kernel', choices=kernels, default=kernels[0])
    sub.add_argument('--xi', type=_REAL, default=1.0, help="ξ of the Bessel kernel")
    sub.add_argument('--a', type=_REAL, default=None, help="parameter a ∈ [0, π] of the sine kernel")
    sub.add_argument('--t', type=_REALS, default=(), help="t_1,t_2,… of the contour kernel")
    sub.add_argument('--tbar', type=_REALS, default=None, help="t̄_1,t̄_2,… (defaults to t)")


def _add_shape_flags(sub, cells=512):
    sub.add_argument('--u', type=_REALS, default=(0.0,), help="potential values summing to zero")
    sub.add_argument('--kappa', type=_REAL, default=1.0)
    sub.add_argument('--cells', type=_INT, default=cells)
    sub.add_argument('--half-width', type=_REAL, default=None)


def _subcommand_flags(command, sub):
    if command == Command.ENUMERATE:
        sub.add_argument('--n', type=_INT, required=True)
    elif command == Command.DIM:
        sub.add_argument('--partition', required=True, help='comma-separated parts, e.g. "8,5,4,2,2,1"')
    elif command == Command.MEASURE_TABLE:
        sub.add_argument('--measure', choices=['plancherel', 'poissonized', 'schur', 'jack', 'periodic'],
                         required=True)
        sub.add_argument('--n', type=_INT, default=None)
        sub.add_argument('--xi', type=_RATIONAL, default=None)
        sub.add_argument('--t', type=_RATIONALS, default=())
        sub.add_argument('--tbar', type=_RATIONALS, default=None)
        sub.add_argument('--eps1', type=_RATIONAL, default=None)
        sub.add_argument('--eps2', type=_RATIONAL, default=None)
        sub.add_argument('--d', type=_INT, default=None)
        sub.add_argument('--u', type=_RATIONALS, default=())
        sub.add_argument('--hbar', type=_RATIONAL, default=None)
        sub.add_argument('--truncation', type=_INT, default=None)
    elif command == Command.SAMPLE:
        sub.add_argument('--measure', choices=['plancherel', 'poissonized'], required=True)
        sub.add_argument('--n', type=_INT, default=None)
        sub.add_argument('--xi', type=_REAL, default=None)
        sub.add_argument('--count', type=_INT, default=1)
    elif command == Command.CORRELATE:
        _add_kernel_flags(sub, ['bessel', 'sine', 'contour'])
        sub.add_argument('--points', type=_POINTS, required=True, help='"−1/2,1/2" or "-5/2:5/2"')
        sub.add_argument('--brute-energy', type=_INT, default=None,
                         help="also sum the measure over |λ| ≤ this energy")
    elif command == Command.GAP:
        sub.add_argument('--xi', type=_REAL, required=True)
        sub.add_argument('--h-max', type=_INT, required=True)
    elif command == Command.KERNEL:
        _add_kernel_flags(sub, ['bessel', 'sine', 'contour'])
        sub.add_argument('--range', type=_POINTS, required=True, help='lattice points, e.g. "-5/2:5/2"')
    elif command == Command.LIMIT_SHAPE:
        sub.add_argument('--t', type=_REALS, default=(1.0,))
        sub.add_argument('--tbar', type=_REALS, default=None)
        sub.add_argument('--levels', type=_REALS, required=True)
        sub.add_argument('--offset', type=_INT, default=None, help="also report the limiting kernel at Δx")
    elif command == Command.HOOK_ENERGY:
        sub.add_argument('--cells', type=_INT, default=4096)
        sub.add_argument('--half-width', type=_REAL, default=3.0)
        sub.add_argument('--tolerance', type=_REAL, default=REFINEMENT_TOLERANCE,
                         help="largest relative change of E when the grid is halved")
        sub.add_argument('--form', choices=['measure', 'literal'], default='measure')
        sub.add_argument('--partition', default=None, help="evaluate at this diagram scaled by 1/√|λ|")
    elif command == Command.MAXIMIZE:
        _add_shape_flags(sub)
    elif command == Command.SW_SHAPE:
        _add_shape_flags(sub)
        sub.add_argument('--constant', type=_REAL, default=None, help="period constant (π/2 by default)")
        sub.add_argument('--calibrate', action='store_true', help="also fit the constant to the direct maximizer")
    elif command == Command.GW:
        sub.add_argument('--degree', type=_INT, required=True)
        sub.add_argument('--insertions', type=_INTS, default=())
        sub.add_argument('--target-genus', type=_INT, default=0)
        sub.add_argument('--connected', action='store_true', help="connected one-point invariants by genus")
        sub.add_argument('--genus-max', type=_INT, default=3)
        sub.add_argument('--workers', type=_INT, default=None, help="threads for the partition sum")
    elif command == Command.HURWITZ:
        sub.add_argument('--degree', type=_INT, required=True)
        sub.add_argument('--base-genus', type=_INT, default=0)
        sub.add_argument('--branch', type=_BRANCH, action='append', default=[],
                         help="one branch class per flag, e.g. --branch 2,1")
        sub.add_argument('--brute', action='store_true', help="also count by enumerating permutations")
        sub.add_argument('--workers', type=_INT, default=None, help="threads for the partition sum")
    elif command == Command.ELLIPTIC_TRACE:
        sub.add_argument('--z', type=_COMPLEXES, required=True, help="insertion points z_i")
        sub.add_argument('--order', type=_INT, default=10)


def build_parser():
    """Create the argument parser with one subparser per Command."""
    parser = argparse.ArgumentParser(prog=PROG, description="Random partitions: measures, kernels, "
                                     "limit shapes and Gromov-Witten partition sums.")
    subparsers = parser.add_subparsers(dest='command', metavar='subcommand')
    subparsers.required = True
    common = _common_flags()
    for command in Command:
        doc = command_docs.get(command, {})
        sub = subparsers.add_parser(command.value, parents=[common], help=doc.get('description'),
                                    description=doc.get('description'), usage=doc.get('usage'))
        _subcommand_flags(command, sub)
    return parser


def _precision(command, requested):
    if command in FLOAT_ONLY:
        if requested == Precision.EXACT.value:
            raise ArgumentError(f"{command.value} produces floating-point results; --exact is not available")
        return Precision.FLOAT
    return Precision(requested) if requested else Precision.EXACT


def parse_args(argv=None):
    """
    Resolve argv into a RunConfig.

    Raises:
        SystemExit: On usage errors (code 2) and --help (code 0), from argparse
        ArgumentError: If --exact is requested for a float-only subcommand
    """
    namespace = vars(build_parser().parse_args(argv))
    command = Command(namespace['command'])
    params = {key: value for key, value in namespace.items() if key not in _GLOBAL_KEYS}
    if 'branch' in params:
        params['branch'] = tuple(params['branch'])
    return RunConfig(
        command=command,
        params=params,
        seed=namespace['seed'],
        out=namespace['out'],
        fmt=OutputFormat(namespace['format']),
        precision=_precision(command, namespace['precision']),
        verbose=namespace['verbose'],
    )
