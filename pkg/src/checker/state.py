"""Per-evaluation memo of satisfying sets."""

import logging
from typing import Dict, FrozenSet, List, Optional

from src.formula.ast import Formula, subformulas

logger = logging.getLogger(__name__)


class SatResult:
    """Satisfying set of a formula plus the memo of every subformula."""

    def __init__(self, formula: Formula, states: List[str]):
        self.formula = formula
        self.all_states: List[str] = list(states)
        self.memo: Dict[Formula, FrozenSet[str]] = {}
        self.evaluated: Optional[Formula] = None  # the desugared formula

    def record(self, f: Formula, satisfying: FrozenSet[str]) -> None:
        """Store the satisfying set of a subformula."""
        self.memo[f] = frozenset(satisfying)
        logger.debug(f"{type(f).__name__}: {len(satisfying)}/{len(self.all_states)} states")

    def lookup(self, f: Formula) -> FrozenSet[str]:
        return self.memo[f]

    @property
    def satisfying(self) -> FrozenSet[str]:
        return self.memo[self.evaluated if self.evaluated is not None else self.formula]

    def ordered(self) -> List[str]:
        return [s for s in self.all_states if s in self.satisfying]

    @property
    def valid(self) -> bool:
        return len(self.satisfying) == len(self.all_states)

    def is_closed(self) -> bool:
        """Every subformula of the evaluated formula has a memo entry."""
        root = self.evaluated if self.evaluated is not None else self.formula
        return all(g in self.memo for g in subformulas(root))

    def get_summary(self) -> Dict[str, object]:
        return {
            "satisfying": self.ordered(),
            "failing": [s for s in self.all_states if s not in self.satisfying],
            "valid": self.valid,
            "subformulas": len(self.memo),
        }
