"""Checks applied when a system is built from user-supplied step tables."""

import logging
from typing import Dict, FrozenSet, Sequence, Tuple

from src.errors import (
    InvalidSystemError,
    NonBijectiveStepError,
    PartialStepError,
    UnknownStateError,
)

from .interfaces import Generator, TimeMonoid, TimeVariant

logger = logging.getLogger(__name__)


def _check_table(generator: Generator, states: Tuple[str, ...], table: Dict[str, str]) -> Dict[str, str]:
    known = set(states)
    for source, target in table.items():
        if source not in known:
            raise UnknownStateError(source, f"step {generator}")
        if target not in known:
            raise UnknownStateError(target, f"step {generator}")
    missing = [s for s in states if s not in table]
    if missing:
        raise PartialStepError(generator, missing)
    return {s: table[s] for s in states}


def inverse_step(states: Tuple[str, ...], table: Dict[str, str]) -> Dict[str, str]:
    """Inverse of a bijective step table; raises when the table is not bijective."""
    inverse: Dict[str, str] = {}
    collisions = []
    for source in states:
        target = table[source]
        if target in inverse:
            collisions.append(target)
        inverse[target] = source
    if collisions:
        raise NonBijectiveStepError(collisions)
    return {s: inverse[s] for s in states}


def validated_steps(
    time: TimeMonoid,
    states: Tuple[str, ...],
    steps: Dict[Generator, Dict[str, str]],
) -> Dict[Generator, Dict[str, str]]:
    if not states:
        raise InvalidSystemError("A dynamical system needs at least one state")
    if len(set(states)) != len(states):
        raise InvalidSystemError(f"Duplicate state names in {states}")

    if time.variant == TimeVariant.INT:
        if 1 not in steps:
            raise InvalidSystemError("Int time requires a declared 1-step")
        forward = _check_table(1, states, steps[1])
        backward = inverse_step(states, forward)
        if -1 in steps and _check_table(-1, states, steps[-1]) != backward:
            logger.warning("Declared -1 step ignored; using the inverse of the 1-step")
        return {1: forward, -1: backward}

    extra = [g for g in steps if g not in time.generators]
    if extra:
        raise InvalidSystemError(f"Steps declared for non-generators {extra} of {time.describe()}")
    result = {}
    for generator in time.generators:
        if generator not in steps:
            raise InvalidSystemError(f"No step declared for generator {generator!r}")
        result[generator] = _check_table(generator, states, steps[generator])
    return result


def validated_labels(states: Tuple[str, ...], labels: Dict[str, Sequence[str]]) -> Dict[str, FrozenSet[str]]:
    known = set(states)
    result = {}
    for atom, members in labels.items():
        for state in members:
            if state not in known:
                raise UnknownStateError(state, f"label {atom}")
        if not members:
            logger.warning(f"Atom '{atom}' labels no state")
        result[atom] = frozenset(members)
    return result
