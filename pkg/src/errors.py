"""Exception hierarchy shared by every dynlogic package."""

from typing import Optional, Sequence, Tuple


class DynLogicError(Exception):
    """Base class for all dynlogic errors."""


class InvalidTimeValueError(DynLogicError, ValueError):
    """A time value does not belong to the declared time monoid."""


class InvalidSystemError(DynLogicError, ValueError):
    """A dynamical system (or its document) is malformed."""


class UnknownStateError(InvalidSystemError):
    def __init__(self, state: str, where: str = ""):
        self.state = state
        suffix = f" in {where}" if where else ""
        super().__init__(f"Unknown state '{state}'{suffix}")


class PartialStepError(InvalidSystemError):
    def __init__(self, generator, missing: Sequence[str]):
        self.generator = generator
        self.missing = tuple(missing)
        super().__init__(
            f"Step {generator!r} is not total: no image for {', '.join(self.missing)}"
        )


class NonBijectiveStepError(InvalidSystemError):
    def __init__(self, collisions: Sequence[str]):
        self.collisions = tuple(collisions)
        super().__init__(
            "Int time requires a bijective 1-step; "
            f"states hit more than once: {', '.join(self.collisions)}"
        )


class TimeMismatchError(DynLogicError, ValueError):
    """An operation is not defined for the system's time variant."""


class UnknownAtomError(DynLogicError, ValueError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"Unknown atomic proposition '{atom}'")


class LiftShapeError(DynLogicError, ValueError):
    """Arguments of a relational lifting do not have the functor's shape."""


class BisimilarStatesError(DynLogicError, ValueError):
    def __init__(self, x: str, y: str):
        self.states = (x, y)
        super().__init__(f"States '{x}' and '{y}' are bisimilar; no formula separates them")


class SyntaxProblem(DynLogicError, ValueError):
    """Base class for text-format errors."""


class RegexSyntaxError(SyntaxProblem):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class FormulaSyntaxError(SyntaxProblem):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class DocumentSyntaxError(SyntaxProblem):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class PreconditionViolatedError(DynLogicError, ValueError):
    """A frame does not satisfy the precondition of a construction."""

    def __init__(self, message: str, counterexample: Optional[Tuple[str, ...]] = None):
        self.counterexample = counterexample
        if counterexample is not None:
            message = f"{message} (counterexample: {', '.join(counterexample)})"
        super().__init__(message)


class NotPreorderError(PreconditionViolatedError):
    pass


class ConstructionGapError(DynLogicError, ValueError):
    """The linear-time construction has no sound step for this frame."""

    def __init__(self, message: str, witness: Tuple[str, ...]):
        self.witness = tuple(witness)
        super().__init__(f"{message} (witness scc: {{{', '.join(self.witness)}}})")


class CarrierMismatchError(DynLogicError, ValueError):
    pass


class AxiomBoundExceededError(DynLogicError, ValueError):
    pass


class SearchBoundExceededError(DynLogicError, ValueError):
    pass
