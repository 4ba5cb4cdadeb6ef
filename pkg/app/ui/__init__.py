"""User interface components - table rendering and terminal highlighting."""
from .render import format_value, metadata, render, render_csv, render_json
from .table_lexer import TableLexer
from .terminal import emit, is_terminal, write_file

__all__ = [
    'emit',
    'format_value',
    'is_terminal',
    'metadata',
    'render',
    'render_csv',
    'render_json',
    'write_file',
    'TableLexer',
]
