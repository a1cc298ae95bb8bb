"""Runtime configuration loaded from the environment."""

from .settings import (
    ACTION_BOUND,
    AXIOM_WORLD_BOUND,
    LOG_LEVEL,
    RANDOM_SEED,
    configure_logging,
)

__all__ = ['ACTION_BOUND', 'AXIOM_WORLD_BOUND', 'LOG_LEVEL', 'RANDOM_SEED', 'configure_logging']
