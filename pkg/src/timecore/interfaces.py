"""Time monoids, dynamical systems and trajectory records."""

from enum import Enum
from itertools import product, repeat
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import InvalidTimeValueError

TimeValue = Union[int, Tuple[str, ...], Tuple[int, ...]]
Generator = Union[int, str]


class TimeVariant(str, Enum):
    NAT = "nat"
    INT = "int"
    WORD = "word"
    FREE_IDX = "free"


class TimeMonoid(BaseModel):
    """A finitely generated discrete time monoid (T, 0, +)."""

    model_config = ConfigDict(frozen=True)

    variant: TimeVariant
    alphabet: Tuple[str, ...] = ()
    size: int = 0  # number of generators of FreeIdx time

    @model_validator(mode='after')
    def _check_shape(self) -> 'TimeMonoid':
        if self.variant == TimeVariant.WORD:
            if not self.alphabet:
                raise ValueError("Word time needs a nonempty alphabet")
            if len(set(self.alphabet)) != len(self.alphabet):
                raise ValueError(f"Duplicate symbols in alphabet {self.alphabet}")
        if self.variant == TimeVariant.FREE_IDX and self.size < 1:
            raise ValueError("FreeIdx time needs at least one generator")
        return self

    @classmethod
    def nat(cls) -> 'TimeMonoid':
        return cls(variant=TimeVariant.NAT)

    @classmethod
    def int_(cls) -> 'TimeMonoid':
        return cls(variant=TimeVariant.INT)

    @classmethod
    def word(cls, alphabet: Sequence[str]) -> 'TimeMonoid':
        return cls(variant=TimeVariant.WORD, alphabet=tuple(alphabet))

    @classmethod
    def free(cls, size: int) -> 'TimeMonoid':
        return cls(variant=TimeVariant.FREE_IDX, size=size)

    @property
    def is_numeric(self) -> bool:
        """Nat or Int: time values are integers and 1 generates."""
        return self.variant in (TimeVariant.NAT, TimeVariant.INT)

    @property
    def identity(self) -> TimeValue:
        return 0 if self.is_numeric else ()

    @property
    def generators(self) -> Tuple[Generator, ...]:
        if self.variant == TimeVariant.NAT:
            return (1,)
        if self.variant == TimeVariant.INT:
            return (1, -1)
        if self.variant == TimeVariant.WORD:
            return self.alphabet
        return tuple(range(self.size))

    def generator_value(self, generator: Generator) -> TimeValue:
        if generator not in self.generators:
            raise InvalidTimeValueError(f"{generator!r} is not a generator of {self.describe()}")
        return generator if self.is_numeric else (generator,)

    def describe(self) -> str:
        if self.variant == TimeVariant.WORD:
            return f"word time over {{{', '.join(self.alphabet)}}}"
        if self.variant == TimeVariant.FREE_IDX:
            return f"free time on {self.size} generators"
        return f"{self.variant.value} time"

    def check(self, value: TimeValue) -> TimeValue:
        """Return ``value`` unchanged if it belongs to this monoid."""
        if self.is_numeric:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidTimeValueError(f"{value!r} is not an integer time value")
            if self.variant == TimeVariant.NAT and value < 0:
                raise InvalidTimeValueError(f"Negative time {value} is not in nat time")
            return value
        if not isinstance(value, tuple):
            raise InvalidTimeValueError(f"{value!r} is not a word over {self.describe()}")
        allowed = self.generators
        for symbol in value:
            if isinstance(symbol, bool) or symbol not in allowed:
                raise InvalidTimeValueError(f"Symbol {symbol!r} is outside {self.describe()}")
        return value

    def coerce(self, raw) -> TimeValue:
        """Convert user-facing input (ints, strings, lists) into a TimeValue."""
        if self.is_numeric:
            if isinstance(raw, str):
                try:
                    raw = int(raw)
                except ValueError:
                    raise InvalidTimeValueError(f"{raw!r} is not an integer time value")
            return self.check(raw)
        if self.variant == TimeVariant.FREE_IDX:
            if isinstance(raw, int) and not isinstance(raw, bool):
                return self.check((raw,))
            if isinstance(raw, str):
                raw = () if raw in ('', '~') else tuple(int(part) for part in raw.split())
            return self.check(tuple(raw))
        if isinstance(raw, str):
            if raw in ('', '~'):
                return ()
            if raw in self.alphabet:
                return (raw,)
            if ' ' in raw:
                return self.check(tuple(raw.split()))
            return self.check(tuple(raw))
        return self.check(tuple(raw))

    def add(self, a: TimeValue, b: TimeValue) -> TimeValue:
        # integer addition for Nat/Int, concatenation for words
        return self.check(a) + self.check(b)

    def decompose(self, value: TimeValue) -> Iterator[Generator]:
        """Generators whose sum is ``value``, left to right, yielded lazily."""
        self.check(value)
        if self.is_numeric:
            return repeat(1 if value >= 0 else -1, abs(value))
        return iter(value)

    def length(self, value: TimeValue) -> int:
        self.check(value)
        return abs(value) if self.is_numeric else len(value)

    def split_last(self, value: TimeValue) -> Tuple[TimeValue, Generator]:
        """Split a non-identity value into (prefix, last generator)."""
        if value == self.identity:
            raise InvalidTimeValueError("The identity has no last generator")
        if self.is_numeric:
            sign = 1 if value > 0 else -1
            return value - sign, sign
        return value[:-1], value[-1]

    def elements(self, max_length: int) -> Iterator[TimeValue]:
        """All values of generator length <= max_length, shortest first."""
        if self.variant == TimeVariant.NAT:
            yield from range(max_length + 1)
            return
        if self.variant == TimeVariant.INT:
            yield 0
            for n in range(1, max_length + 1):
                yield n
                yield -n
            return
        for n in range(max_length + 1):
            for word in product(self.generators, repeat=n):
                yield tuple(word)


class OrderProfile(BaseModel):
    """Order-theoretic classification of a monoid order."""

    model_config = ConfigDict(frozen=True)

    linear: bool
    symmetric: bool
    nonbranching: bool

    @model_validator(mode='after')
    def _symmetric_is_linear(self) -> 'OrderProfile':
        if self.symmetric and not self.linear:
            raise ValueError("A symmetric monoid order is always linear")
        return self


class DynSystem(BaseModel):
    """A finite dynamical system presented by its generating steps.

    Use :meth:`build` for validated construction. Instantiating the model
    directly skips validation, which is how hand-written step tables get
    audited by ``validate_action``.
    """

    model_config = ConfigDict(frozen=True)

    time: TimeMonoid
    states: Tuple[str, ...]
    steps: Dict[Generator, Dict[str, str]]
    labels: Dict[str, FrozenSet[str]] = Field(default_factory=dict)

    @classmethod
    def build(
        cls,
        time: TimeMonoid,
        states: Sequence[str],
        steps: Dict[Generator, Dict[str, str]],
        labels: Optional[Dict[str, Sequence[str]]] = None,
    ) -> 'DynSystem':
        from .validation import validated_steps, validated_labels

        states = tuple(states)
        return cls(
            time=time,
            states=states,
            steps=validated_steps(time, states, steps),
            labels=validated_labels(states, labels or {}),
        )

    @property
    def is_linear_time(self) -> bool:
        from .monoid import mon_classify

        return mon_classify(self.time).linear

    @property
    def is_invertible(self) -> bool:
        from .monoid import mon_classify

        return mon_classify(self.time).symmetric

    @property
    def atoms(self) -> Tuple[str, ...]:
        return tuple(self.labels)

    def step(self, generator: Generator) -> Dict[str, str]:
        try:
            return self.steps[generator]
        except KeyError:
            raise InvalidTimeValueError(f"System declares no step for generator {generator!r}")

    def ordered(self, states) -> List[str]:
        """Sort any state collection by declaration order."""
        members = set(states)
        return [s for s in self.states if s in members]


class Lasso(BaseModel):
    """Eventually periodic trajectory: prefix followed by a repeating cycle."""

    model_config = ConfigDict(frozen=True)

    prefix: Tuple[str, ...]
    cycle: Tuple[str, ...]

    @model_validator(mode='after')
    def _check_distinct(self) -> 'Lasso':
        if not self.cycle:
            raise ValueError("A lasso cycle must be nonempty")
        visited = self.prefix + self.cycle
        if len(set(visited)) != len(visited):
            raise ValueError(f"Lasso states repeat: {visited}")
        return self

    @property
    def period(self) -> int:
        return len(self.cycle)

    @property
    def span(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def at(self, position: int) -> str:
        """State at trajectory position ``position`` (negative for Int time)."""
        if 0 <= position < len(self.prefix):
            return self.prefix[position]
        return self.cycle[(position - len(self.prefix)) % len(self.cycle)]

    def states_from(self, position: int) -> FrozenSet[str]:
        """Every state occurring at some position >= ``position``."""
        if position <= len(self.prefix):
            return frozenset(self.prefix[max(position, 0):] + self.cycle)
        return frozenset(self.cycle)

    def states_before(self, position: int) -> FrozenSet[str]:
        """Every state occurring at some position in 0..position-1."""
        if position <= len(self.prefix):
            return frozenset(self.prefix[:max(position, 0)])
        return frozenset(self.prefix + self.cycle[:position - len(self.prefix)])


class ActionViolation(BaseModel):
    law: str  # "unit" or "composition"
    state: str
    t: TimeValue
    u: Optional[TimeValue] = None
    expected: str
    actual: str


class ActionReport(BaseModel):
    bound: int
    checked_pairs: int = 0
    violations: List[ActionViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations
