"""Frame validity of the modal axiom schemes T, 4, .3 and 5.

A scheme is valid on a frame when every instance holds at every world under
every valuation of its metavariables. Valuations are enumerated as bit masks
over the worlds (bit i is the i-th declared world) and evaluated in bulk as
boolean matrices with one row per valuation.
"""

import logging
from typing import Dict, Optional, Union

import numpy as np

from src.config import AXIOM_WORLD_BOUND
from src.errors import AxiomBoundExceededError

from .classifier import FrameClassifier
from .interfaces import AxiomReport, AxiomScheme, Frame

logger = logging.getLogger(__name__)


def valuation_masks(n: int) -> np.ndarray:
    """All 2^n subsets of n worlds as rows of a boolean matrix, in mask order."""
    masks = np.arange(2 ** n, dtype=np.int64)[:, None]
    return ((masks >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


class _Kripke:
    def __init__(self, frame: Frame):
        index = {w: i for i, w in enumerate(frame.worlds)}
        self.r = np.zeros((len(frame.worlds), len(frame.worlds)), dtype=np.int64)
        for x, y in frame.relation:
            self.r[index[x], index[y]] = 1

    def box(self, values: np.ndarray) -> np.ndarray:
        """[]X at w: no R-successor of w lies outside X (row-wise)."""
        return ((~values).astype(np.int64) @ self.r.T) == 0

    def diamond(self, values: np.ndarray) -> np.ndarray:
        return (values.astype(np.int64) @ self.r.T) > 0


def _implies(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return ~a | b


def axiom_validity(fr: Frame, scheme: Union[AxiomScheme, str], bound: int = AXIOM_WORLD_BOUND) -> AxiomReport:
    """Decide frame validity; the report names the first falsifying world and valuation."""
    scheme = AxiomScheme(scheme)
    n = len(fr.worlds)
    if n > bound:
        raise AxiomBoundExceededError(
            f"Frame has {n} worlds; axiom checks are bounded at {bound} "
            "(set DYNLOGIC_AXIOM_WORLD_BOUND to raise it)"
        )

    kripke = _Kripke(fr)
    values = valuation_masks(n)

    if scheme == AxiomScheme.DOT_THREE:
        box_b = kripke.box(values)
        for i, a in enumerate(values):
            box_a = kripke.box(a[None, :])
            left = kripke.box(_implies(box_a, values))
            right = kripke.box(_implies(box_b, a[None, :]))
            failures = ~(left | right)
            if failures.any():
                j, w = np.argwhere(failures)[0]
                return _counter(fr, scheme, w, A=values[i], B=values[j])
        return _valid(scheme)

    if scheme == AxiomScheme.T:
        holds = _implies(kripke.box(values), values)
    elif scheme == AxiomScheme.FOUR:
        box_a = kripke.box(values)
        holds = _implies(box_a, kripke.box(box_a))
    else:
        dia_a = kripke.diamond(values)
        holds = _implies(dia_a, kripke.box(dia_a))

    failures = ~holds
    if failures.any():
        i, w = np.argwhere(failures)[0]
        return _counter(fr, scheme, w, A=values[i])
    return _valid(scheme)


def _valid(scheme: AxiomScheme) -> AxiomReport:
    logger.debug(f"Scheme {scheme.value} valid")
    return AxiomReport(scheme=scheme, valid=True)


def _counter(fr: Frame, scheme: AxiomScheme, world: int, **assignment: np.ndarray) -> AxiomReport:
    valuation = {
        name: tuple(w for w, member in zip(fr.worlds, mask) if member)
        for name, mask in assignment.items()
    }
    report = AxiomReport(scheme=scheme, valid=False, world=fr.worlds[int(world)], valuation=valuation)
    logger.info(report.describe())
    return report


def axiom_profile(fr: Frame) -> Dict[AxiomScheme, AxiomReport]:
    return {scheme: axiom_validity(fr, scheme) for scheme in AxiomScheme}


def strongest_logic(fr: Frame) -> Optional[str]:
    """S5, S4.3 or S4 for symmetric, non-branching or plain preorders; None otherwise."""
    classifier = FrameClassifier(fr)
    if classifier.preorder() is not None:
        return None
    if classifier.symmetric() is None:
        return "S5"
    if classifier.nonbranching() is None:
        return "S4.3"
    return "S4"
