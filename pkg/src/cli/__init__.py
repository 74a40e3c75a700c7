"""
Generic Forest Lab - command line
Parser factory and command registration
"""
import argparse

from src.core.errors import UsageError


class CliArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, carrying the synopsis."""

    def error(self, message):
        error = UsageError(f"{self.prog}: {message}")
        error.usage = self.format_usage().strip()
        raise error


def create_parser():
    """Parser factory: one subcommand per library operation"""
    parser = CliArgumentParser(
        prog='forestlab',
        description='Strong substructures, games and decision procedures for forests',
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    # Register command modules
    from src.cli.commands import games, generic, graph, independence, logic, structure
    for module in (graph, structure, independence, logic, games, generic):
        module.register(subparsers)

    return parser
