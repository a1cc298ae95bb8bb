"""Time monoids and finite dynamical systems as monoid actions."""

from .interfaces import (
    ActionReport,
    ActionViolation,
    DynSystem,
    Lasso,
    OrderProfile,
    TimeMonoid,
    TimeValue,
    TimeVariant,
)
from .monoid import mon_add, mon_classify, mon_leq
from .dynamics import apply, orbit, reachability, trajectory_lasso, validate_action

__all__ = [
    'ActionReport', 'ActionViolation', 'DynSystem', 'Lasso', 'OrderProfile',
    'TimeMonoid', 'TimeValue', 'TimeVariant',
    'mon_add', 'mon_classify', 'mon_leq',
    'apply', 'orbit', 'reachability', 'trajectory_lasso', 'validate_action',
]
