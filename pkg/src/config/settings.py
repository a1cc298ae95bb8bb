"""Settings read from the environment (and an optional .env file)."""

import os
import logging
import sys

from dotenv import load_dotenv

load_dotenv()

# Configuration
AXIOM_WORLD_BOUND = int(os.getenv('DYNLOGIC_AXIOM_WORLD_BOUND', 12))
ACTION_BOUND = int(os.getenv('DYNLOGIC_ACTION_BOUND', 4))
LOG_LEVEL = os.getenv('DYNLOGIC_LOG_LEVEL', 'WARNING').upper()
RANDOM_SEED = int(os.getenv('DYNLOGIC_RANDOM_SEED', 20240601))

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = LOG_LEVEL) -> logging.Logger:
    """Attach a single stderr handler to the package loggers."""
    root = logging.getLogger('src')
    root.setLevel(level.upper())

    # Add a stream handler if none exists
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    return root
