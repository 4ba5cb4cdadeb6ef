from prompt_toolkit import print_formatted_text
from prompt_toolkit.formatted_text import PygmentsTokens
from prompt_toolkit.styles.pygments import style_from_pygments_cls
from pygments.lexers.data import JsonLexer
from pygments.styles import get_style_by_name

from ..types import OutputFormat
from .table_lexer import TableLexer

_LEXERS = {
    OutputFormat.CSV: TableLexer,
    OutputFormat.JSON: JsonLexer,
}


def is_terminal(stream):
    """True when the stream is an interactive terminal."""
    isatty = getattr(stream, 'isatty', None)
    try:
        return bool(isatty and isatty())
    except ValueError:
        return False


def emit(text, fmt, stream):
    """
    Write rendered output to a stream.

    Terminals get dracula-styled highlighting; files and pipes get the plain text.
    """
    if not is_terminal(stream):
        stream.write(text)
        stream.flush()
        return
    style = style_from_pygments_cls(get_style_by_name('dracula'))
    tokens = list(_LEXERS[fmt]().get_tokens(text))
    print_formatted_text(PygmentsTokens(tokens), style=style, end='',
                         file=stream)


def write_file(text, path):
    """Write rendered output to a file as UTF-8."""
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(text)
