import sys
from contextlib import redirect_stderr, redirect_stdout

from .core.orchestration.runner import run
from .parsing import parse_args
from .types import PartitionsError, exit_code_for


def main(argv=None, stdout=None, stderr=None):
    """
    Command-line entry point.

    Usage and help text from the parser go to the same streams as the run.

    Returns:
        Exit code of the run
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            config = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except PartitionsError as e:
        print(f"Error: {e}", file=stderr)
        return exit_code_for(e)
    return run(config, stdout=stdout, stderr=stderr)


if __name__ == "__main__":
    sys.exit(main())
