import logging
import sys

from ...commands.subcommands import execute_subcommand
from ...types import EXIT_ARGUMENT, EXIT_OK, PartitionsError, exit_code_for
from ...ui import emit, render, write_file

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbose, stream=None):
    """Route library logging and warnings to stderr; DEBUG with --verbose."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=stream or sys.stderr,
        force=True,
    )
    logging.captureWarnings(True)


def run(config, stdout=None, stderr=None):
    """
    Execute one resolved run: subcommand, rendering, output.

    Args:
        config: RunConfig
        stdout: Stream for the table when config.out is None
        stderr: Stream for the error line and logging

    Returns:
        Exit code: 0 on success, 2 for argument/domain/resource errors,
        3 for numeric failures and broken invariants
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    configure_logging(config.verbose, stderr)

    try:
        table = execute_subcommand(config)
        text = render(table, config)
        if config.out is None:
            emit(text, config.fmt, stdout)
        else:
            write_file(text, config.out)
            logger.debug("wrote %d rows to %s", len(table), config.out)
    except PartitionsError as e:
        diagnostics = getattr(e, 'diagnostics', None)
        if diagnostics:
            logger.debug("diagnostics: %s", diagnostics)
        print(f"Error: {e}", file=stderr)
        return exit_code_for(e)
    except OSError as e:
        print(f"Error: {e}", file=stderr)
        return EXIT_ARGUMENT
    return EXIT_OK
