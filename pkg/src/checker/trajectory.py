"""Trajectory operators evaluated on lassos and automaton products.

Each function takes the satisfying sets of the operator's arguments and
returns the set of states satisfying the operator.
"""

import logging
from collections import deque
from math import lcm
from typing import FrozenSet

from src.errors import TimeMismatchError
from src.formula.automata import Dfa
from src.timecore.dynamics import trajectory_lasso
from src.timecore.interfaces import DynSystem, TimeVariant

logger = logging.getLogger(__name__)


def _require(sys: DynSystem, operator: str, *variants: TimeVariant) -> None:
    if sys.time.variant not in variants:
        allowed = ' or '.join(v.value for v in variants)
        raise TimeMismatchError(f"{operator} needs {allowed} time, not {sys.time.describe()}")


def zip_states(sys: DynSystem, even: FrozenSet[str], odd: FrozenSet[str]) -> FrozenSet[str]:
    """Even positions satisfy ``even``, odd positions satisfy ``odd``.

    One window of lcm(period, 2) positions after the prefix repeats forever.
    For int time the trajectory is a pure cycle over all integer positions,
    and the same window covers every (cycle residue, parity) pair.
    """
    _require(sys, "zip", TimeVariant.NAT, TimeVariant.INT)
    result = set()
    for s in sys.states:
        lasso = trajectory_lasso(sys, s)
        horizon = len(lasso.prefix) + lcm(lasso.period, 2)
        if all(lasso.at(t) in (even if t % 2 == 0 else odd) for t in range(horizon)):
            result.add(s)
    return frozenset(result)


def chg_states(
    sys: DynSystem, t: int, before: FrozenSet[str], at: FrozenSet[str], after: FrozenSet[str]
) -> FrozenSet[str]:
    """Positions u < t satisfy ``before``, t satisfies ``at``, u > t satisfy ``after``."""
    _require(sys, "chg", TimeVariant.NAT)
    if isinstance(t, bool) or not isinstance(t, int) or t < 0:
        raise TimeMismatchError(f"chg needs a nat duration, got {t!r}")
    result = set()
    for s in sys.states:
        lasso = trajectory_lasso(sys, s)
        if not lasso.states_before(t) <= before:
            continue
        if lasso.at(t) not in at:
            continue
        if lasso.states_from(t + 1) <= after:
            result.add(s)
    return frozenset(result)


def until_states(sys: DynSystem, left: FrozenSet[str], right: FrozenSet[str]) -> FrozenSet[str]:
    """Some position t satisfies ``right`` with every earlier position in ``left``.

    A minimal witness lies within prefix + one period: later positions only
    revisit states already seen with a longer stretch of ``left`` to maintain.
    """
    _require(sys, "until", TimeVariant.NAT)
    result = set()
    for s in sys.states:
        lasso = trajectory_lasso(sys, s)
        for t in range(lasso.span + 1):
            state = lasso.at(t)
            if state in right:
                result.add(s)
                break
            if state not in left:
                break
    return frozenset(result)


def eat_states(
    sys: DynSystem, dfa: Dfa, accept: FrozenSet[str], reject: FrozenSet[str]
) -> FrozenSet[str]:
    """Words in the language lead to ``accept``, all other words to ``reject``.

    Explores the product of the system's steps with the automaton from
    (s, initial); every reachable pair must meet the obligation of its
    automaton state.
    """
    _require(sys, "eat", TimeVariant.WORD)
    if set(dfa.alphabet) != set(sys.time.alphabet):
        raise TimeMismatchError(
            f"Language alphabet {{{', '.join(dfa.alphabet)}}} differs from "
            f"system alphabet {{{', '.join(sys.time.alphabet)}}}"
        )
    result = set()
    for s in sys.states:
        start = (s, dfa.initial)
        seen = {start}
        queue = deque([start])
        holds = True
        while queue and holds:
            q, d = queue.popleft()
            holds = q in (accept if d in dfa.accepting else reject)
            for symbol in sys.time.alphabet:
                pair = (sys.steps[symbol][q], dfa.step(d, symbol))
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        if holds:
            result.add(s)
    logger.debug(f"eat /{dfa.pattern}/ holds at {len(result)} of {len(sys.states)} states")
    return frozenset(result)
