"""Command-line interface: subcommand parsing, execution, rendering and the verification sweep."""

from pgroupcount.cli.executor import CommandExecutor
from pgroupcount.cli.main import main

__all__ = ["CommandExecutor", "main"]
