"""Entry point for the superaccumulator command-line tool."""

import logging
import sys

from src.superaccumulator.cli import app
from src.superaccumulator.config import settings

# Custom logging format
LOG_FORMAT = "[%(asctime)s] %(levelname)-8s %(message)s"
DATE_FORMAT = "%m/%d/%y %H:%M:%S"


def configure_logging():
    """Configure unified logging format for all loggers."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))

    # Configure root logger
    root = logging.getLogger()
    root.setLevel(settings.log_level.upper())
    root.handlers = [handler]

    # Reduce noise from the MCP transport stack
    logging.getLogger("mcp").setLevel(logging.WARNING)


def main():
    """Run the command-line app."""
    configure_logging()
    app()


if __name__ == "__main__":
    main()
