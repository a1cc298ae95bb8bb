"""Brute-force reference semantics for the trajectory operators.

These simulate trajectories position by position and compare automata
directly; they share no code with the lasso/product evaluators and serve as
their cross-check in the test and acceptance suites.
"""

from collections import deque
from math import lcm
from typing import FrozenSet, List

from src.formula.automata import Dfa
from src.timecore.dynamics import apply, trajectory_lasso
from src.timecore.interfaces import DynSystem, TimeVariant


def oracle_horizon(sys: DynSystem, s: str) -> int:
    lasso = trajectory_lasso(sys, s)
    return len(lasso.prefix) + 2 * lcm(lasso.period, 2) + 2


def simulate(sys: DynSystem, s: str, horizon: int) -> List[str]:
    """States at positions 0 .. horizon-1, stepping one unit at a time."""
    positions = [s]
    while len(positions) < horizon:
        positions.append(apply(sys, positions[-1], 1))
    return positions


def oracle_zip(sys: DynSystem, even: FrozenSet[str], odd: FrozenSet[str]) -> FrozenSet[str]:
    result = set()
    for s in sys.states:
        horizon = oracle_horizon(sys, s)
        positions = list(enumerate(simulate(sys, s, horizon)))
        if sys.time.variant == TimeVariant.INT:
            positions += [(-t, apply(sys, s, -t)) for t in range(1, horizon)]
        if all(state in (even if t % 2 == 0 else odd) for t, state in positions):
            result.add(s)
    return frozenset(result)


def oracle_chg(sys: DynSystem, t: int, before, at, after) -> FrozenSet[str]:
    result = set()
    for s in sys.states:
        trajectory = simulate(sys, s, max(oracle_horizon(sys, s), t + 1) + t)
        if (all(q in before for q in trajectory[:t])
                and trajectory[t] in at
                and all(q in after for q in trajectory[t + 1:])):
            result.add(s)
    return frozenset(result)


def oracle_until(sys: DynSystem, left, right) -> FrozenSet[str]:
    result = set()
    for s in sys.states:
        for q in simulate(sys, s, oracle_horizon(sys, s)):
            if q in right:
                result.add(s)
                break
            if q not in left:
                break
    return frozenset(result)


def system_dfa(sys: DynSystem, s: str, accepting: FrozenSet[str]) -> Dfa:
    """Read a word-time system as an automaton started at ``s``."""
    index = {q: i for i, q in enumerate(sys.states)}
    return Dfa(
        alphabet=sys.time.alphabet,
        transitions=tuple(
            tuple(index[sys.steps[symbol][q]] for symbol in sys.time.alphabet) for q in sys.states
        ),
        initial=index[s],
        accepting=frozenset(index[q] for q in accepting),
    )


def language_contained(inner: Dfa, outer: Dfa) -> bool:
    """Every word accepted by ``inner`` is accepted by ``outer``."""
    start = (inner.initial, outer.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if p in inner.accepting and q not in outer.accepting:
            return False
        for symbol in inner.alphabet:
            pair = (inner.step(p, symbol), outer.step(q, symbol))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True
