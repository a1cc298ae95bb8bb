"""Model checking: the satisfaction relation of Moss models over dynamical systems."""

from .engine import (
    eval_chg,
    eval_eat,
    eval_until,
    eval_zip,
    evaluate,
    holds_at,
    sat_result,
    unit_step,
    valid,
)
from .state import SatResult

__all__ = [
    'SatResult', 'eval_chg', 'eval_eat', 'eval_until', 'eval_zip',
    'evaluate', 'holds_at', 'sat_result', 'unit_step', 'valid',
]
