"""Coalgebraic views of a dynamical system and state partitions."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator


class Functor(str, Enum):
    """Functors whose relational liftings the views need."""

    IDENTITY = "identity"   # x I[R] y  iff  x R y
    CONSTANT = "constant"   # c [R]@C c'  iff  c = c'
    POWERSET = "powerset"   # Egli-Milner
    HOM = "hom"             # f [R]^C g  iff  f(c) R g(c) for all c


@dataclass(frozen=True)
class Step:
    """The t-step view, an identity-functor coalgebra.

    ``t=None`` is the unit step: 1 for nat/int time, the first generator otherwise.
    """
    t: Any = None

    functor = Functor.IDENTITY


@dataclass(frozen=True)
class MultiStep:
    """The U-multi-step view; ``times=None`` means the generator set."""
    times: Optional[Tuple[Any, ...]] = None

    functor = Functor.HOM


@dataclass(frozen=True)
class Orbit:
    """The orbit view, a powerset coalgebra."""

    functor = Functor.POWERSET


ViewKind = Union[Step, MultiStep, Orbit]


@dataclass(frozen=True)
class CoalgView:
    """A coalgebra on the system's states composed in parallel with its labelling."""

    kind: ViewKind
    states: Tuple[str, ...]
    table: Dict[str, Any]
    labels: Dict[str, FrozenSet[str]] = field(default_factory=dict)

    @property
    def functor(self) -> Functor:
        return self.kind.functor

    def label_set(self, state: str) -> FrozenSet[str]:
        """The constant-functor component: atoms true at ``state``."""
        return frozenset(atom for atom, members in self.labels.items() if state in members)


class Partition(BaseModel):
    """Disjoint, covering blocks of states; block ids follow first appearance."""

    model_config = ConfigDict(frozen=True)

    blocks: Tuple[Tuple[str, ...], ...]
    index: Dict[str, int]
    rounds: int = 0

    @model_validator(mode='after')
    def _check_partition(self) -> 'Partition':
        members = [s for block in self.blocks for s in block]
        if len(members) != len(set(members)):
            raise ValueError("Partition blocks overlap")
        if any(not block for block in self.blocks):
            raise ValueError("Partition blocks must be nonempty")
        if set(members) != set(self.index):
            raise ValueError("Partition index does not cover exactly the block members")
        for i, block in enumerate(self.blocks):
            if any(self.index[s] != i for s in block):
                raise ValueError("Partition index disagrees with blocks")
        return self

    @classmethod
    def from_index(cls, states: Tuple[str, ...], index: Dict[str, int], rounds: int = 0) -> 'Partition':
        """Renumber block ids by first appearance in ``states``."""
        renumber: Dict[int, int] = {}
        for s in states:
            renumber.setdefault(index[s], len(renumber))
        blocks: List[List[str]] = [[] for _ in renumber]
        for s in states:
            blocks[renumber[index[s]]].append(s)
        return cls(
            blocks=tuple(tuple(b) for b in blocks),
            index={s: renumber[index[s]] for s in states},
            rounds=rounds,
        )

    def block_of(self, state: str) -> Tuple[str, ...]:
        return self.blocks[self.index[state]]

    def same_block(self, x: str, y: str) -> bool:
        return self.index[x] == self.index[y]

    def as_relation(self) -> FrozenSet[Tuple[str, str]]:
        return frozenset((x, y) for block in self.blocks for x in block for y in block)
