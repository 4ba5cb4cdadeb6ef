"""Subcommand handlers of the command-line tool."""
from .subcommands import HANDLERS, command_docs, execute_subcommand

__all__ = ['HANDLERS', 'command_docs', 'execute_subcommand']
