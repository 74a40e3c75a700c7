"""
Command dispatch: parse, run the handler, map errors to exit codes
"""
import logging
import sys

from src.cli import create_parser
from src.cli.outcome import CommandOutcome
from src.config.logging_config import log_command, log_error
from src.core.errors import CapacityError, ExitCode, ForestLabError, FormulaSyntaxError, GraphFormatError

logger = logging.getLogger(__name__)


def _error_payload(error):
    payload = {'error': type(error).__name__, 'message': str(error)}
    if isinstance(error, GraphFormatError) and error.position:
        payload['position'] = error.position
    if isinstance(error, FormulaSyntaxError):
        payload.update({'line': error.line, 'column': error.column})
    if isinstance(error, CapacityError):
        payload.update({'guard': error.guard, 'requested': error.requested, 'limit': error.limit})
    usage = getattr(error, 'usage', None)
    if usage:
        payload['usage'] = usage
    return payload


def run(argv=None, stdout=None):
    """
    Run one command and print its JSON payload

    Args:
        argv: argument vector without the program name (default: sys.argv[1:])
        stdout: stream for the payload (default: sys.stdout)

    Returns:
        CommandOutcome
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
        log_command(args.command, argv)
        outcome = args.handler(args)
    except ForestLabError as e:
        log_error(type(e).__name__, str(e), {'argv': argv})
        outcome = CommandOutcome(e.exit_code, _error_payload(e))
    except ValueError as e:
        log_error(type(e).__name__, str(e), {'argv': argv})
        outcome = CommandOutcome(ExitCode.USAGE, _error_payload(e))
    except SystemExit as e:
        # --help and friends have already printed their text
        return CommandOutcome(ExitCode.OK if not e.code else ExitCode.USAGE)

    outcome.emit(stdout)
    logger.debug(f"exit code {int(outcome.exit_code)}")
    return outcome


def main(argv=None):
    return int(run(argv).exit_code)
