"""The monoid action Phi of a system: steps, trajectories and orbits."""

import logging
from collections import deque
from typing import Dict, FrozenSet

from src.errors import InvalidTimeValueError, TimeMismatchError, UnknownStateError

from .interfaces import ActionReport, ActionViolation, DynSystem, Lasso, TimeValue

logger = logging.getLogger(__name__)


def _require_state(sys: DynSystem, s: str) -> None:
    if s not in sys.states:
        raise UnknownStateError(s)


def apply(sys: DynSystem, s: str, t: TimeValue) -> str:
    """Phi(s, t): fold the generating steps over a decomposition of t.

    Numeric durations longer than the state count are read off the lasso.
    """
    _require_state(sys, s)
    if sys.time.is_numeric and sys.time.length(t) > len(sys.states):
        lasso = trajectory_lasso(sys, s)
        if t > 0 or not lasso.prefix:
            return lasso.at(t)
    state = s
    for generator in sys.time.decompose(t):
        state = sys.step(generator)[state]
    return state


class _ActionTable:
    """Memoised Phi(s, t) computed by extending t one generator at a time."""

    def __init__(self, sys: DynSystem):
        self.sys = sys
        self.cache: Dict[tuple, str] = {}

    def __call__(self, s: str, t: TimeValue) -> str:
        key = (s, t)
        if key in self.cache:
            return self.cache[key]
        if t == self.sys.time.identity:
            result = s
        else:
            prefix, last = self.sys.time.split_last(t)
            result = self.sys.step(last)[self(s, prefix)]
        self.cache[key] = result
        return result


def validate_action(sys: DynSystem, bound: int) -> ActionReport:
    """Check the unit and composition laws for all t, u of length <= bound."""
    if bound < 1:
        raise InvalidTimeValueError(f"bound must be at least 1, got {bound}")
    time = sys.time
    report = ActionReport(bound=bound)
    phi = _ActionTable(sys)
    values = list(time.elements(bound))

    for s in sys.states:
        if phi(s, time.identity) != s:
            report.violations.append(ActionViolation(
                law="unit", state=s, t=time.identity, expected=s, actual=phi(s, time.identity)
            ))

    for s in sys.states:
        for t in values:
            middle = phi(s, t)
            for u in values:
                report.checked_pairs += 1
                stepped = phi(middle, u)
                direct = phi(s, time.add(t, u))
                if stepped != direct:
                    report.violations.append(ActionViolation(
                        law="composition", state=s, t=t, u=u, expected=direct, actual=stepped
                    ))

    if report.violations:
        logger.warning(f"Action laws violated {len(report.violations)} times (bound {bound})")
    else:
        logger.debug(f"Action laws hold on {report.checked_pairs} pairs (bound {bound})")
    return report


def trajectory_lasso(sys: DynSystem, s: str) -> Lasso:
    """Walk the 1-step from s until a state repeats."""
    if not sys.time.is_numeric:
        raise TimeMismatchError(f"Trajectory lassos need nat or int time, not {sys.time.describe()}")
    _require_state(sys, s)
    step = sys.step(1)
    seen: Dict[str, int] = {}
    walk = []
    state = s
    while state not in seen:
        seen[state] = len(walk)
        walk.append(state)
        state = step[state]
    entry = seen[state]
    return Lasso(prefix=tuple(walk[:entry]), cycle=tuple(walk[entry:]))


def orbit(sys: DynSystem, s: str) -> FrozenSet[str]:
    """Forward closure of {s} under every generating step."""
    _require_state(sys, s)
    reached = {s}
    queue = deque([s])
    while queue:
        current = queue.popleft()
        for table in sys.steps.values():
            target = table[current]
            if target not in reached:
                reached.add(target)
                queue.append(target)
    return frozenset(reached)


def reachability(sys: DynSystem) -> Dict[str, FrozenSet[str]]:
    """Orbit of every state, keyed in declaration order."""
    return {s: orbit(sys, s) for s in sys.states}

