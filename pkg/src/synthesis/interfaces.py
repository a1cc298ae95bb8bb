from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class Frame(BaseModel):
    """A finite Kripke frame; world order is the declaration order."""

    model_config = ConfigDict(frozen=True)

    worlds: Tuple[str, ...]
    relation: FrozenSet[Tuple[str, str]]

    @model_validator(mode='after')
    def _check_relation(self) -> 'Frame':
        if len(set(self.worlds)) != len(self.worlds):
            raise ValueError("Frame worlds must be distinct")
        known = set(self.worlds)
        for x, y in sorted(self.relation):
            if x not in known or y not in known:
                raise ValueError(f"Edge ({x}, {y}) mentions an undeclared world")
        return self

    def related(self, x: str, y: str) -> bool:
        return (x, y) in self.relation

    def image(self, x: str) -> List[str]:
        """R-successors of x in declaration order."""
        return [y for y in self.worlds if (x, y) in self.relation]

    def edges(self) -> List[Tuple[str, str]]:
        return [(x, y) for x in self.worlds for y in self.worlds if (x, y) in self.relation]


class Check(BaseModel):
    """A decided frame property; the counterexample is present exactly when it fails."""

    model_config = ConfigDict(frozen=True)

    holds: bool
    counterexample: Optional[Tuple[str, ...]] = None

    @model_validator(mode='after')
    def _counterexample_iff_failure(self) -> 'Check':
        if self.holds == (self.counterexample is not None):
            raise ValueError("A counterexample is given exactly when the check fails")
        return self

    def __bool__(self) -> bool:
        return self.holds


class FrameProfile(BaseModel):
    preorder: Check
    nonbranching: Check
    symmetric: Check
    linear: Check
    transient_scc_singleton: Check

    def get_summary(self) -> Dict[str, bool]:
        return {name: check.holds for name, check in self}


class AxiomScheme(str, Enum):
    T = "T"                # []A -> A
    FOUR = "4"             # []A -> [][]A
    DOT_THREE = ".3"       # []([]A -> B) | []([]B -> A)
    FIVE = "5"             # <>A -> []<>A

    @property
    def metavariables(self) -> Tuple[str, ...]:
        return ("A", "B") if self == AxiomScheme.DOT_THREE else ("A",)


class AxiomReport(BaseModel):
    """Outcome of a frame-validity check, with the first falsifying world and valuation."""

    scheme: AxiomScheme
    valid: bool
    world: Optional[str] = None
    valuation: Dict[str, Tuple[str, ...]] = {}

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return f"{self.scheme.value}: valid"
        assignment = ", ".join(f"{k}={{{', '.join(v)}}}" for k, v in self.valuation.items())
        return f"{self.scheme.value}: fails at {self.world} under {assignment}"
