"""Seeded random frames for the synthesis round-trip properties."""

import random
from typing import List, Set, Tuple

from .interfaces import Frame


def _worlds(rng: random.Random, max_worlds: int) -> List[str]:
    return [f"w{i}" for i in range(rng.randint(1, max_worlds))]


def _closure(worlds: List[str], pairs: Set[Tuple[str, str]]) -> frozenset:
    """Reflexive-transitive closure."""
    closed = set(pairs) | {(w, w) for w in worlds}
    for k in worlds:
        for i in worlds:
            if (i, k) in closed:
                for j in worlds:
                    if (k, j) in closed:
                        closed.add((i, j))
    return frozenset(closed)


def random_preorder(rng: random.Random, max_worlds: int = 6, density: float = 0.3) -> Frame:
    worlds = _worlds(rng, max_worlds)
    edges = {(x, y) for x in worlds for y in worlds if rng.random() < density}
    return Frame(worlds=tuple(worlds), relation=_closure(worlds, edges))


def random_equivalence(rng: random.Random, max_worlds: int = 6) -> Frame:
    worlds = _worlds(rng, max_worlds)
    classes = {w: rng.randrange(len(worlds)) for w in worlds}
    relation = frozenset((x, y) for x in worlds for y in worlds if classes[x] == classes[y])
    return Frame(worlds=tuple(worlds), relation=relation)


def random_linear_ready(rng: random.Random, max_worlds: int = 6) -> Frame:
    """A non-branching preorder whose transient worlds are singleton sccs.

    Built as a forest of chains leading into terminal cycles: each world either
    joins a terminal class or points at one earlier-placed world.
    """
    worlds = _worlds(rng, max_worlds)
    order = worlds[:]
    rng.shuffle(order)
    parent = {}
    terminal = {}
    for i, w in enumerate(order):
        if i == 0 or rng.random() < 0.4:
            anchor = order[rng.randrange(i)] if i and rng.random() < 0.5 else None
            if anchor is not None and anchor in terminal:
                terminal[w] = terminal[anchor]
            else:
                terminal[w] = w
        else:
            parent[w] = order[rng.randrange(i)]
    edges = {(w, p) for w, p in parent.items()}
    edges |= {(w, root) for w, root in terminal.items()} | {(root, w) for w, root in terminal.items()}
    return Frame(worlds=tuple(worlds), relation=_closure(worlds, edges))


def random_frames(seed: int, count: int, kind: str = "preorder", **kwargs) -> List[Frame]:
    make = {
        "preorder": random_preorder,
        "equivalence": random_equivalence,
        "linear": random_linear_ready,
    }[kind]
    rng = random.Random(seed)
    return [make(rng, **kwargs) for _ in range(count)]
