"""Formula syntax tree.

Nodes are frozen dataclasses, so formulas hash and compare structurally and
can key memo tables. Time arguments (``NextVia.t``, ``NablaMulti`` keys,
``Chg.t``) hold raw time values; they are coerced against the system's time
monoid at evaluation.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .automata import Dfa


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    items: Tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(self.items))


@dataclass(frozen=True)
class Or(Formula):
    items: Tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(self.items))


@dataclass(frozen=True)
class NablaStep(Formula):
    """Nabla of the t-step view; ``duration=None`` is the unit step."""
    operand: Formula
    duration: Any = None


@dataclass(frozen=True)
class NablaMulti(Formula):
    """Nabla of the multi-step view: a finite map time -> formula."""
    arg: Tuple[Tuple[Any, Formula], ...]

    def __post_init__(self):
        arg = self.arg.items() if isinstance(self.arg, dict) else self.arg
        object.__setattr__(self, 'arg', tuple((key, value) for key, value in arg))

    def as_dict(self) -> Dict[Any, Formula]:
        return dict(self.arg)


@dataclass(frozen=True)
class NablaOrbit(Formula):
    """Finitary nabla of the orbit view; items form a set (kept in first-seen order)."""
    items: Tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(dict.fromkeys(self.items)))


@dataclass(frozen=True)
class Next(Formula):
    operand: Formula


@dataclass(frozen=True)
class NextVia(Formula):
    t: Any
    operand: Formula


@dataclass(frozen=True)
class Prev(Formula):
    operand: Formula


@dataclass(frozen=True)
class Box(Formula):
    operand: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    operand: Formula


@dataclass(frozen=True)
class Zip(Formula):
    even: Formula
    odd: Formula


@dataclass(frozen=True)
class Eat(Formula):
    pattern: str
    accept: Formula
    reject: Formula
    dfa: Optional[Dfa] = field(default=None, compare=False)


@dataclass(frozen=True)
class Chg(Formula):
    t: int
    before: Formula
    at: Formula
    after: Formula


@dataclass(frozen=True)
class MinDur(Formula):
    t: int
    operand: Formula


@dataclass(frozen=True)
class MinDurIncl(Formula):
    t: int
    operand: Formula


@dataclass(frozen=True)
class MaxDur(Formula):
    t: int
    operand: Formula


@dataclass(frozen=True)
class MaxDurExcl(Formula):
    t: int
    operand: Formula


@dataclass(frozen=True)
class Until(Formula):
    left: Formula
    right: Formula


UNARY = (Not, Next, Prev, Box, Diamond, NablaStep)
DURATION = (MinDur, MinDurIncl, MaxDur, MaxDurExcl)
TRAJECTORY = (Zip, Eat, Chg, Until) + DURATION


def children(f: Formula) -> Tuple[Formula, ...]:
    """Immediate subformulas in syntactic order."""
    if isinstance(f, UNARY) or isinstance(f, NextVia) or isinstance(f, DURATION):
        return (f.operand,)
    if isinstance(f, (Implies, Until)):
        return (f.left, f.right)
    if isinstance(f, (And, Or, NablaOrbit)):
        return f.items
    if isinstance(f, NablaMulti):
        return tuple(value for _, value in f.arg)
    if isinstance(f, Zip):
        return (f.even, f.odd)
    if isinstance(f, Eat):
        return (f.accept, f.reject)
    if isinstance(f, Chg):
        return (f.before, f.at, f.after)
    return ()


def subformulas(f: Formula) -> List[Formula]:
    """Post-order listing, children before parents, without duplicates."""
    seen = set()
    ordered: List[Formula] = []

    def visit(node: Formula) -> None:
        if node in seen:
            return
        for child in children(node):
            visit(child)
        seen.add(node)
        ordered.append(node)

    visit(f)
    return ordered


def atoms(f: Formula) -> List[str]:
    return [node.name for node in subformulas(f) if isinstance(node, Atom)]


def depth(f: Formula) -> int:
    return 1 + max((depth(child) for child in children(f)), default=0)


def conjunction(items: Iterable[Formula]) -> Formula:
    """And of ``items``, collapsing the empty and singleton cases."""
    items = list(dict.fromkeys(items))
    if not items:
        return Top()
    return items[0] if len(items) == 1 else And(items)


def disjunction(items: Iterable[Formula]) -> Formula:
    items = list(dict.fromkeys(items))
    if not items:
        return Bot()
    return items[0] if len(items) == 1 else Or(items)
