"""Seeded random formulas for the sampled invariance and translation checks."""

import random
from typing import Sequence

from .ast import (
    And,
    Atom,
    Bot,
    Box,
    Chg,
    Diamond,
    Formula,
    Implies,
    NablaOrbit,
    Next,
    Not,
    Or,
    Top,
    Until,
    Zip,
)


def random_formula(
    rng: random.Random,
    atoms: Sequence[str],
    depth: int = 3,
    trajectory: bool = False,
) -> Formula:
    """A random formula of nesting depth <= ``depth``.

    The default fragment is boolean + orbit modalities (G, F, finite nabla).
    ``trajectory=True`` adds X, zip, chg and until, which need nat time.
    """
    if depth <= 1 or rng.random() < 0.2:
        leaves = [Atom(a) for a in atoms] + [Top(), Bot()]
        return rng.choice(leaves)

    sub = lambda: random_formula(rng, atoms, depth - 1, trajectory)
    builders = [
        lambda: Not(sub()),
        lambda: Implies(sub(), sub()),
        lambda: And([sub(), sub()]),
        lambda: Or([sub(), sub()]),
        lambda: Box(sub()),
        lambda: Diamond(sub()),
        lambda: NablaOrbit([sub() for _ in range(rng.randint(0, 3))]),
    ]
    if trajectory:
        builders += [
            lambda: Next(sub()),
            lambda: Zip(sub(), sub()),
            lambda: Chg(rng.randint(0, 4), sub(), sub(), sub()),
            lambda: Until(sub(), sub()),
        ]
    return rng.choice(builders)()


def random_regex(rng: random.Random, alphabet: Sequence[str], depth: int = 3) -> str:
    """A random pattern in the eat() regex syntax over single-character symbols."""
    if depth <= 1 or rng.random() < 0.25:
        return rng.choice(list(alphabet) + ['~'])
    sub = lambda: random_regex(rng, alphabet, depth - 1)
    form = rng.randrange(3)
    if form == 0:
        return f"({sub()})*"
    if form == 1:
        return f"{sub()}{sub()}"
    return f"({sub()}|{sub()})"
