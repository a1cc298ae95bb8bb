"""Build the step, multi-step and orbit coalgebras of a system."""

import logging

from src.timecore.dynamics import apply, reachability
from src.timecore.interfaces import DynSystem

from .interfaces import CoalgView, MultiStep, Orbit, Step, ViewKind

logger = logging.getLogger(__name__)


def build_view(sys: DynSystem, kind: ViewKind) -> CoalgView:
    if isinstance(kind, Step):
        if kind.t is None:
            t = 1 if sys.time.is_numeric else sys.time.generator_value(sys.time.generators[0])
        else:
            t = sys.time.coerce(kind.t)
        table = {s: apply(sys, s, t) for s in sys.states}
        kind = Step(t)
    elif isinstance(kind, MultiStep):
        if kind.times is None:
            times = tuple(sys.time.generator_value(g) for g in sys.time.generators)
        else:
            times = tuple(sys.time.coerce(u) for u in kind.times)
        table = {s: {u: apply(sys, s, u) for u in times} for s in sys.states}
        kind = MultiStep(times)
    elif isinstance(kind, Orbit):
        table = reachability(sys)
    else:
        raise TypeError(f"Unknown view kind {kind!r}")

    logger.debug(f"Built {type(kind).__name__} view over {len(sys.states)} states")
    return CoalgView(kind=kind, states=sys.states, table=table, labels=dict(sys.labels))
