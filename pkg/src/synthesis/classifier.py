"""Order-theoretic classification of Kripke frames."""

import logging
from typing import List, Optional, Tuple

from .interfaces import Check, Frame, FrameProfile

logger = logging.getLogger(__name__)

Witness = Optional[Tuple[str, ...]]


class FrameClassifier:
    """Decides the frame properties the constructions depend on.

    Every check quantifies over worlds in declaration order, so the reported
    counterexample is the first violating tuple in that order.
    """

    PREORDER = "preorder"
    NONBRANCHING = "nonbranching"
    SYMMETRIC = "symmetric"
    LINEAR = "linear"
    TRANSIENT_SCC_SINGLETON = "transient_scc_singleton"

    # Defining conditions, for logging
    CONDITIONS = {
        PREORDER: "x R x, and x R y, y R z imply x R z",
        NONBRANCHING: "x R y and x R z imply y R z or z R y",
        SYMMETRIC: "x R y implies y R x",
        LINEAR: "x R y or y R x",
        TRANSIENT_SCC_SINGLETON: "every world with a successor is alone in its scc",
    }

    def __init__(self, frame: Frame):
        self.frame = frame
        self.worlds = frame.worlds
        self.r = frame.related

    def scc_of(self, x: str) -> List[str]:
        """Worlds mutually related with x, in declaration order (x itself included)."""
        return [y for y in self.worlds if y == x or (self.r(x, y) and self.r(y, x))]

    def is_transient(self, x: str) -> bool:
        """x has a successor: some y with x R y but not y R x."""
        return any(self.r(x, y) and not self.r(y, x) for y in self.worlds)

    def preorder(self) -> Witness:
        for x in self.worlds:
            if not self.r(x, x):
                return (x, x)
        for x in self.worlds:
            for y in self.worlds:
                if not self.r(x, y):
                    continue
                for z in self.worlds:
                    if self.r(y, z) and not self.r(x, z):
                        return (x, y, z)
        return None

    def nonbranching(self) -> Witness:
        for x in self.worlds:
            image = self.frame.image(x)
            for y in image:
                for z in image:
                    if not self.r(y, z) and not self.r(z, y):
                        return (x, y, z)
        return None

    def symmetric(self) -> Witness:
        for x in self.worlds:
            for y in self.worlds:
                if self.r(x, y) and not self.r(y, x):
                    return (x, y)
        return None

    def linear(self) -> Witness:
        for x in self.worlds:
            for y in self.worlds:
                if not self.r(x, y) and not self.r(y, x):
                    return (x, y)
        return None

    def transient_scc_singleton(self) -> Witness:
        for x in self.worlds:
            scc = self.scc_of(x)
            if len(scc) > 1 and self.is_transient(x):
                return tuple(scc)
        return None

    def get_classification(self) -> FrameProfile:
        logger.debug(f"=== Classifying frame with {len(self.worlds)} worlds ===")
        checks = {}
        for name in self.CONDITIONS:
            witness = getattr(self, name)()
            checks[name] = Check(holds=witness is None, counterexample=witness)
            if witness is None:
                logger.debug(f"✓ {name}")
            else:
                logger.debug(f"✗ {name}: {self.CONDITIONS[name]} fails for {witness}")
        profile = FrameProfile(**checks)
        logger.info(f"Frame profile: {profile.get_summary()}")
        return profile


def classify_frame(fr: Frame) -> FrameProfile:
    return FrameClassifier(fr).get_classification()
