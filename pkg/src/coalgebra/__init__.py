"""Coalgebraic views of dynamical systems: liftings, bisimilarity and distinguishing formulas."""

from .interfaces import CoalgView, Functor, MultiStep, Orbit, Partition, Step, ViewKind
from .lifting import functor_of, lift_check, lift_product
from .views import build_view
from .bisimulation import (
    PartitionRefiner,
    bisimilarity,
    characteristic_formula,
    distinguishing_formula,
    trajectory_bisimilarity,
)

__all__ = [
    'CoalgView', 'Functor', 'MultiStep', 'Orbit', 'Partition', 'Step', 'ViewKind',
    'functor_of', 'lift_check', 'lift_product', 'build_view',
    'PartitionRefiner', 'bisimilarity', 'characteristic_formula',
    'distinguishing_formula', 'trajectory_bisimilarity',
]
