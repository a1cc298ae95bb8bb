"""Satisfaction of formulas over a labelled dynamical system."""

import logging
from typing import Callable, Dict, FrozenSet, Union

from src.errors import TimeMismatchError, UnknownAtomError, UnknownStateError
from src.formula.ast import (
    And,
    Atom,
    Bot,
    Chg,
    Eat,
    Formula,
    Implies,
    NablaMulti,
    NablaOrbit,
    NablaStep,
    Not,
    Or,
    Prev,
    Top,
    Until,
    Zip,
    subformulas,
)
from src.formula.automata import Dfa
from src.formula.desugar import desugar
from src.formula.regex import regex_to_dfa
from src.timecore.dynamics import apply, reachability
from src.timecore.interfaces import DynSystem, TimeValue, TimeVariant

from .state import SatResult
from .trajectory import chg_states, eat_states, until_states, zip_states

logger = logging.getLogger(__name__)


def unit_step(sys: DynSystem) -> TimeValue:
    """The duration of X: 1 for nat/int time, the only generator otherwise."""
    if sys.time.is_numeric:
        return 1
    generators = sys.time.generators
    if len(generators) != 1:
        raise TimeMismatchError(
            f"X needs a unit step; {sys.time.describe()} has {len(generators)} generators (use X[t])"
        )
    return sys.time.generator_value(generators[0])


class _Evaluator:
    def __init__(self, sys: DynSystem):
        self.sys = sys
        self.universe = frozenset(sys.states)
        self._orbits = None

    @property
    def orbits(self) -> Dict[str, FrozenSet[str]]:
        if self._orbits is None:
            self._orbits = reachability(self.sys)
        return self._orbits

    def preimage(self, t: TimeValue, target: FrozenSet[str]) -> FrozenSet[str]:
        return frozenset(s for s in self.sys.states if apply(self.sys, s, t) in target)

    def node(self, f: Formula, sat: Callable[[Formula], FrozenSet[str]]) -> FrozenSet[str]:
        sys = self.sys
        if isinstance(f, Atom):
            if f.name not in sys.labels:
                raise UnknownAtomError(f.name)
            return sys.labels[f.name]
        if isinstance(f, Top):
            return self.universe
        if isinstance(f, Bot):
            return frozenset()
        if isinstance(f, Not):
            return self.universe - sat(f.operand)
        if isinstance(f, Implies):
            return (self.universe - sat(f.left)) | sat(f.right)
        if isinstance(f, And):
            result = self.universe
            for g in f.items:
                result = result & sat(g)
            return result
        if isinstance(f, Or):
            result = frozenset()
            for g in f.items:
                result = result | sat(g)
            return result
        if isinstance(f, NablaStep):
            t = unit_step(sys) if f.duration is None else sys.time.coerce(f.duration)
            return self.preimage(t, sat(f.operand))
        if isinstance(f, NablaMulti):
            result = self.universe
            for key, g in f.arg:
                result = result & self.preimage(sys.time.coerce(key), sat(g))
            return result
        if isinstance(f, NablaOrbit):
            return self.nabla_orbit([sat(g) for g in f.items])
        if isinstance(f, Prev):
            if sys.time.variant != TimeVariant.INT:
                raise TimeMismatchError(f"Y needs int time, not {sys.time.describe()}")
            return self.preimage(-1, sat(f.operand))
        if isinstance(f, Zip):
            return zip_states(sys, sat(f.even), sat(f.odd))
        if isinstance(f, Chg):
            return chg_states(sys, f.t, sat(f.before), sat(f.at), sat(f.after))
        if isinstance(f, Until):
            return until_states(sys, sat(f.left), sat(f.right))
        if isinstance(f, Eat):
            return eat_states(sys, self.language(f), sat(f.accept), sat(f.reject))
        raise TypeError(f"Formula node {type(f).__name__} survived desugaring")

    def nabla_orbit(self, members) -> FrozenSet[str]:
        """Egli-Milner: the orbit and the argument set cover each other under |=."""
        result = set()
        for s in self.sys.states:
            orbit = self.orbits[s]
            forth = all(any(y in m for m in members) for y in orbit)
            back = all(any(y in m for y in orbit) for m in members)
            if forth and back:
                result.add(s)
        return frozenset(result)

    def language(self, f: Eat) -> Dfa:
        if self.sys.time.variant != TimeVariant.WORD:
            raise TimeMismatchError(f"eat needs word time, not {self.sys.time.describe()}")
        return f.dfa if f.dfa is not None else regex_to_dfa(f.pattern, self.sys.time.alphabet)


def sat_result(sys: DynSystem, f: Formula) -> SatResult:
    """Evaluate bottom-up over the subformulas of the desugared formula."""
    result = SatResult(f, list(sys.states))
    core = desugar(f, sys.time.generators)
    result.evaluated = core
    evaluator = _Evaluator(sys)
    for g in subformulas(core):
        result.record(g, evaluator.node(g, result.lookup))
    logger.info(f"Formula holds at {len(result.satisfying)} of {len(sys.states)} states")
    return result


def evaluate(sys: DynSystem, f: Formula) -> FrozenSet[str]:
    """The set of states satisfying ``f``."""
    return sat_result(sys, f).satisfying


def valid(sys: DynSystem, f: Formula) -> bool:
    return len(evaluate(sys, f)) == len(sys.states)


def holds_at(sys: DynSystem, f: Formula, state: str) -> bool:
    if state not in sys.states:
        raise UnknownStateError(state)
    return state in evaluate(sys, f)


def eval_zip(sys: DynSystem, even: Formula, odd: Formula) -> FrozenSet[str]:
    return evaluate(sys, Zip(even, odd))


def eval_eat(sys: DynSystem, language: Union[Dfa, str], accept: Formula, reject: Formula) -> FrozenSet[str]:
    if isinstance(language, Dfa):
        return evaluate(sys, Eat(language.pattern or '', accept, reject, language))
    return evaluate(sys, Eat(language, accept, reject))


def eval_chg(sys: DynSystem, t: int, before: Formula, at: Formula, after: Formula) -> FrozenSet[str]:
    return evaluate(sys, Chg(t, before, at, after))


def eval_until(sys: DynSystem, left: Formula, right: Formula) -> FrozenSet[str]:
    return evaluate(sys, Until(left, right))
