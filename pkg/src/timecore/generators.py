"""Seeded random systems for property suites."""

import random
from typing import List, Optional, Sequence

from .interfaces import DynSystem, TimeMonoid, TimeVariant

ALPHABET_POOL = ('x', 'y', 'z')


def random_time(rng: random.Random, variants: Sequence[TimeVariant] = (
    TimeVariant.NAT, TimeVariant.INT, TimeVariant.WORD,
)) -> TimeMonoid:
    variant = rng.choice(list(variants))
    if variant == TimeVariant.WORD:
        return TimeMonoid.word(ALPHABET_POOL[:rng.randint(1, 3)])
    if variant == TimeVariant.FREE_IDX:
        return TimeMonoid.free(rng.randint(1, 3))
    return TimeMonoid(variant=variant)


def random_system(
    rng: random.Random,
    time: Optional[TimeMonoid] = None,
    max_states: int = 6,
    atoms: Sequence[str] = ('p', 'q'),
) -> DynSystem:
    """A random validated system with up to ``max_states`` states."""
    time = time or random_time(rng)
    states = [f"s{i}" for i in range(rng.randint(1, max_states))]
    if time.variant == TimeVariant.INT:
        image = states[:]
        rng.shuffle(image)
        steps = {1: dict(zip(states, image))}
    else:
        steps = {g: {s: rng.choice(states) for s in states} for g in time.generators}
    labels = {atom: [s for s in states if rng.random() < 0.5] for atom in atoms}
    return DynSystem.build(time, states, steps, labels)


def random_systems(seed: int, count: int, **kwargs) -> List[DynSystem]:
    rng = random.Random(seed)
    return [random_system(rng, **kwargs) for _ in range(count)]
