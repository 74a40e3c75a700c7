"""
Logging Configuration for Generic Forest Lab
Tracks capacity refusals, internal inconsistencies and command activity
"""
import logging
import os
from datetime import datetime

from src.config.config import Config


def setup_logging():
    """
    Configure logging with a dedicated capacity-event log
    Respects LOG_LEVEL environment variable for control

    Environment Variables:
        LOG_LEVEL: Set log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
                   Example: LOG_LEVEL=ERROR (only show errors)
                   Example: LOG_LEVEL=DEBUG (show everything)
                   Default: WARNING

    Console output goes to stderr; stdout is reserved for command payloads.
    """
    log_dir = Config.LOG_DIR
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)

    timestamp = datetime.now().strftime('%Y%m%d')
    log_file = os.path.join(log_dir, f'forestlab_{timestamp}.log')
    capacity_log_file = os.path.join(log_dir, f'capacity_{timestamp}.log')

    log_level_name = os.environ.get('LOG_LEVEL', Config.LOG_LEVEL).upper()
    log_level = getattr(logging, log_level_name, logging.INFO)

    logging.basicConfig(
        level=log_level,
        format=Config.LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler(log_file, encoding='utf-8')
        ]
    )

    # Capacity refusals get their own file so guard tuning can be audited
    capacity_logger = logging.getLogger('capacity')
    capacity_logger.setLevel(logging.WARNING)

    capacity_handler = logging.FileHandler(capacity_log_file, encoding='utf-8')
    capacity_handler.setLevel(logging.WARNING)
    capacity_handler.setFormatter(logging.Formatter(
        '%(asctime)s - CAPACITY - %(levelname)s - %(message)s'
    ))
    capacity_logger.addHandler(capacity_handler)

    logging.info("=" * 80)
    logging.info("Generic Forest Lab started")
    logging.info(f"Log Level: {log_level_name}")
    logging.info(f"Log file: {log_file}")
    logging.info(f"Capacity log: {capacity_log_file}")
    logging.info("=" * 80)

    return logging.getLogger(__name__)


def log_capacity_refusal(guard, requested, limit):
    """
    Log an instance refused by a capacity guard

    Args:
        guard: Name of the guard (e.g. 'SEARCH_MAX_VERTICES')
        requested: Size that was asked for
        limit: Effective limit at the time of the call
    """
    logging.getLogger('capacity').warning(
        f"REFUSED | Guard: {guard} | Requested: {requested} | Limit: {limit} "
        f"| Override with {Config.CAPACITY_ENV_VAR}"
    )


def log_inconsistency(operation, details):
    """
    Log a failed internal cross-check

    Args:
        operation: Operation whose cross-check failed
        details: Dict describing the disagreement
    """
    logging.getLogger('consistency').error(f"INCONSISTENT | Operation: {operation} | Details: {details}")


def log_command(command, argv):
    """
    Log a CLI dispatch

    Args:
        command: Subcommand name
        argv: Raw argument vector
    """
    logging.getLogger('cli').info(f"COMMAND | {command} | argv: {' '.join(argv)}")


def log_error(error_type, error_message, context=None):
    """
    Log application errors with context

    Args:
        error_type: Type of error
        error_message: Error message
        context: Optional context information
    """
    logger = logging.getLogger('error')
    log_msg = f"ERROR | Type: {error_type} | Message: {error_message}"
    if context:
        log_msg += f" | Context: {context}"
    logger.error(log_msg)
