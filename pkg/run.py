"""
Generic Forest Lab
Command-line entry point
"""
import sys

from src.cli.app import main
from src.config.logging_config import setup_logging

# Setup logging
logger = setup_logging()

if __name__ == '__main__':
    sys.exit(main())
