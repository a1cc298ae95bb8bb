"""Relational liftings F[R] for the functors of the coalgebraic views."""

from collections.abc import Mapping, Set
from typing import Any, Iterable, Tuple, Union

from src.errors import LiftShapeError

from .interfaces import Functor, MultiStep, Orbit, Step

Relation = Iterable[Tuple[Any, Any]]


def functor_of(kind: Union[Functor, str, Step, MultiStep, Orbit]) -> Functor:
    if isinstance(kind, (Step, MultiStep, Orbit)):
        return kind.functor
    if kind == "labels":
        return Functor.CONSTANT
    return Functor(kind)


def lift_check(kind, relation: Relation, lhs, rhs) -> bool:
    """Decide lhs F[R] rhs for the functor belonging to ``kind``."""
    functor = functor_of(kind)
    related = set(relation)

    if functor == Functor.IDENTITY:
        return (lhs, rhs) in related

    if functor == Functor.CONSTANT:
        return lhs == rhs

    if functor == Functor.HOM:
        if not isinstance(lhs, Mapping) or not isinstance(rhs, Mapping):
            raise LiftShapeError("The Hom lifting relates two maps")
        if set(lhs) != set(rhs):
            raise LiftShapeError(f"Hom arguments have different domains: {sorted(map(str, lhs))} vs {sorted(map(str, rhs))}")
        return all((lhs[c], rhs[c]) in related for c in lhs)

    if not isinstance(lhs, Set) or not isinstance(rhs, Set):
        raise LiftShapeError("The powerset lifting relates two sets")
    forth = all(any((y, z) in related for z in rhs) for y in lhs)
    back = all(any((y, z) in related for y in lhs) for z in rhs)
    return forth and back


def lift_product(kind, relation: Relation, lhs: Tuple[Any, Any], rhs: Tuple[Any, Any]) -> bool:
    """Lifting for a view composed in parallel with its labelling: (F x Const)[R]."""
    (lhs_value, lhs_labels), (rhs_value, rhs_labels) = lhs, rhs
    return (
        lift_check(kind, relation, lhs_value, rhs_value)
        and lift_check(Functor.CONSTANT, relation, lhs_labels, rhs_labels)
    )
