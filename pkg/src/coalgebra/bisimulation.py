"""Bisimilarity by signature refinement, and formulas separating states."""

import logging
from typing import Dict, List, Tuple

from src.errors import BisimilarStatesError, TimeMismatchError, UnknownStateError
from src.formula.ast import Atom, Diamond, Formula, Next, NextVia, Not, conjunction
from src.timecore.interfaces import DynSystem

from .interfaces import CoalgView, MultiStep, Partition, Step
from .views import build_view

logger = logging.getLogger(__name__)


class PartitionRefiner:
    """Refine the label partition until the lifted transition structure is respected.

    ``history[k]`` maps each state to its block id after round k; round 0 is
    the partition by label sets.
    """

    def __init__(self, view: CoalgView):
        self.view = view
        self.history: List[Dict[str, int]] = []
        self._separators: Dict[Tuple[str, str], Formula] = {}

    def _signature(self, state: str, index: Dict[str, int]):
        kind, image = self.view.kind, self.view.table[state]
        if isinstance(kind, Step):
            return index[image]
        if isinstance(kind, MultiStep):
            return tuple(index[image[u]] for u in kind.times)
        return frozenset(index[y] for y in image)

    @staticmethod
    def _number(states, keys) -> Dict[str, int]:
        ids: Dict[object, int] = {}
        return {s: ids.setdefault(keys[s], len(ids)) for s in states}

    def run(self) -> Partition:
        if self.history:
            return self.partition
        states = self.view.states
        index = self._number(states, {s: self.view.label_set(s) for s in states})
        self.history.append(index)
        while True:
            keys = {s: (index[s], self._signature(s, index)) for s in states}
            refined = self._number(states, keys)
            if len(set(refined.values())) == len(set(index.values())):
                break
            index = refined
            self.history.append(index)
            logger.debug(f"Round {len(self.history) - 1}: {len(set(index.values()))} blocks")
        logger.info(f"Bisimilarity: {len(set(index.values()))} blocks after {len(self.history) - 1} rounds")
        return self.partition

    @property
    def partition(self) -> Partition:
        return Partition.from_index(self.view.states, self.history[-1], rounds=len(self.history) - 1)

    def separation_round(self, x: str, y: str) -> int:
        for k, index in enumerate(self.history):
            if index[x] != index[y]:
                return k
        return -1

    def separator(self, x: str, y: str) -> Formula:
        """A formula true at x and false at y, built from the first separating round."""
        key = (x, y)
        if key in self._separators:
            return self._separators[key]
        k = self.separation_round(x, y)
        if k < 0:
            raise BisimilarStatesError(x, y)
        view = self.view
        if k == 0:
            f = self._label_separator(x, y)
        elif isinstance(view.kind, Step):
            inner = self.separator(view.table[x], view.table[y])
            f = Next(inner) if view.kind.t == 1 else NextVia(view.kind.t, inner)
        elif isinstance(view.kind, MultiStep):
            previous = self.history[k - 1]
            u = next(u for u in view.kind.times if previous[view.table[x][u]] != previous[view.table[y][u]])
            f = NextVia(u, self.separator(view.table[x][u], view.table[y][u]))
        else:
            f = self._orbit_separator(x, y, k - 1)
        self._separators[key] = f
        return f

    def _label_separator(self, x: str, y: str) -> Formula:
        x_labels, y_labels = self.view.label_set(x), self.view.label_set(y)
        for atom in self.view.labels:
            if atom in x_labels and atom not in y_labels:
                return Atom(atom)
            if atom in y_labels and atom not in x_labels:
                return Not(Atom(atom))
        raise BisimilarStatesError(x, y)

    def _orbit_separator(self, x: str, y: str, j: int) -> Formula:
        index = self.history[j]
        x_reps = self._block_representatives(self.view.table[x], index)
        y_reps = self._block_representatives(self.view.table[y], index)
        for block, rep in sorted(x_reps.items()):
            if block not in y_reps:
                return Diamond(self.block_formula(rep, j))
        for block, rep in sorted(y_reps.items()):
            if block not in x_reps:
                return Not(Diamond(self.block_formula(rep, j)))
        raise BisimilarStatesError(x, y)

    def _block_representatives(self, members, index: Dict[str, int]) -> Dict[int, str]:
        reps: Dict[int, str] = {}
        for s in self.view.states:
            if s in members:
                reps.setdefault(index[s], s)
        return reps

    def block_formula(self, state: str, j: int) -> Formula:
        """Characteristic formula of the round-j block containing ``state``."""
        index = self.history[j]
        others = self._block_representatives(
            [s for s in self.view.states if index[s] != index[state]], index
        )
        return conjunction(self.separator(state, rep) for _, rep in sorted(others.items()))


def bisimilarity(view: CoalgView) -> Partition:
    """Coarsest label-respecting partition whose relation passes the view's lifting."""
    return PartitionRefiner(view).run()


def trajectory_bisimilarity(sys: DynSystem) -> Partition:
    """For nat/int time the trajectory view identifies the same states as the 1-step view."""
    if not sys.time.is_numeric:
        raise TimeMismatchError(f"Trajectory bisimilarity is reported for nat/int time only, not {sys.time.describe()}")
    return bisimilarity(build_view(sys, Step(1)))


def distinguishing_formula(view: CoalgView, x: str, y: str) -> Formula:
    """A formula satisfied by x and not by y; raises when they are bisimilar."""
    for s in (x, y):
        if s not in view.states:
            raise UnknownStateError(s)
    refiner = PartitionRefiner(view)
    refiner.run()
    return refiner.separator(x, y)


def characteristic_formula(view: CoalgView, state: str) -> Formula:
    """A formula true exactly on the bisimilarity block of ``state``."""
    if state not in view.states:
        raise UnknownStateError(state)
    refiner = PartitionRefiner(view)
    refiner.run()
    return refiner.block_formula(state, len(refiner.history) - 1)
