from .arguments import PROG, build_parser, parse_args
from .values import (
    parse_branch,
    parse_complex,
    parse_half_integers,
    parse_integer,
    parse_list,
    parse_rational,
    parse_real,
)

__all__ = [
    'PROG',
    'build_parser',
    'parse_args',
    'parse_branch',
    'parse_complex',
    'parse_half_integers',
    'parse_integer',
    'parse_list',
    'parse_rational',
    'parse_real',
]
