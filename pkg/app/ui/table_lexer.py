from pygments.lexer import RegexLexer, bygroups
from pygments.token import (
    Comment,
    Name,
    Number,
    Punctuation,
    String,
    Text,
    Whitespace,
)

RATIONAL_RE = r'-?\d+/\d+'
FLOAT_RE = r'-?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?j?|nan|-?inf'


class TableLexer(RegexLexer):
    """
    Lexer for the CSV tables written by the CLI.

    Highlights the metadata block, the header row, exact rationals and floats.
    """

    name = 'TableLexer'
    aliases = ['rpart-table']
    filenames = ['*.csv']

    tokens = {
        'root': [
            # Metadata block: "# key: value"
            (r'(#\s*)([^:\n]+)(:)([^\n]*)(\n)',
             bygroups(Comment, Name.Attribute, Punctuation, Comment.Single, Whitespace)),
            # First non-comment line is the header
            (r'[^\n]*\n', Name.Tag, 'rows'),
        ],
        'rows': [
            (r'\n', Whitespace),
            (r',', Punctuation),
            (r'"[^"]*"', String),
            (RATIONAL_RE + r'(?=,|\n|$)', Number),
            (FLOAT_RE + r'(?=,|\n|$)', Number.Float),
            (r'[^,\n"]+', Text),
        ],
    }
