"""Total deterministic automata over a finite alphabet.

Minimization and language equivalence go through pyformlang; ``Dfa`` is the
total, integer-numbered table the checker runs products over.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from pyformlang.finite_automaton import DeterministicFiniteAutomaton, State, Symbol


def symbol_name(index: int) -> str:
    """pyformlang symbol standing for the index-th alphabet symbol."""
    return f"s{index}"


@dataclass(frozen=True)
class Dfa:
    """States are 0..n-1; ``transitions[q][i]`` is the successor of q on alphabet[i]."""

    alphabet: Tuple[str, ...]
    transitions: Tuple[Tuple[int, ...], ...]
    initial: int = 0
    accepting: FrozenSet[int] = frozenset()
    pattern: Optional[str] = None

    def __post_init__(self):
        n = len(self.transitions)
        if not 0 <= self.initial < n:
            raise ValueError(f"Initial state {self.initial} outside 0..{n - 1}")
        for q in self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"Accepting state {q} outside 0..{n - 1}")
        for row in self.transitions:
            if len(row) != len(self.alphabet) or any(not 0 <= t < n for t in row):
                raise ValueError("Transition table is not total over the alphabet")

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.alphabet.index(symbol)]

    def run(self, word: Iterable[str], state: Optional[int] = None) -> int:
        state = self.initial if state is None else state
        for symbol in word:
            state = self.step(state, symbol)
        return state

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(word) in self.accepting

    def to_pyformlang(self) -> DeterministicFiniteAutomaton:
        automaton = DeterministicFiniteAutomaton()
        for q, row in enumerate(self.transitions):
            for i, t in enumerate(row):
                automaton.add_transition(State(q), Symbol(symbol_name(i)), State(t))
        automaton.add_start_state(State(self.initial))
        for q in self.accepting:
            automaton.add_final_state(State(q))
        return automaton

    def minimize(self) -> 'Dfa':
        """The minimal total DFA of the same language, numbered in BFS order."""
        return from_pyformlang(self.to_pyformlang().minimize(), self.alphabet, self.pattern)

    def language_equals(self, other: 'Dfa') -> bool:
        if set(self.alphabet) != set(other.alphabet):
            return False
        if self.alphabet != other.alphabet:
            other = dfa_from_table(
                self.alphabet,
                {q: {a: other.step(q, a) for a in self.alphabet} for q in other.states},
                other.initial,
                other.accepting,
            )
        return self.to_pyformlang().is_equivalent_to(other.to_pyformlang())


def _successor(target):
    # deterministic rows hold a State or a singleton set, depending on the pyformlang release
    if isinstance(target, (set, frozenset, list, tuple)):
        return next(iter(target))
    return target


def from_pyformlang(
    automaton: DeterministicFiniteAutomaton,
    alphabet: Sequence[str],
    pattern: Optional[str] = None,
) -> Dfa:
    """Total Dfa of a (possibly partial) pyformlang DFA whose symbols are ``symbol_name(i)``.

    States that cannot reach a final state, and missing transitions, all go to
    one sink; the remaining states are numbered in BFS order from the start.
    """
    alphabet = tuple(alphabet)
    names = [symbol_name(i) for i in range(len(alphabet))]
    table: Dict[State, Dict[str, State]] = {
        q: {symbol.value: _successor(t) for symbol, t in row.items()}
        for q, row in automaton.to_dict().items()
    }
    finals = set(automaton.final_states)

    graph = nx.DiGraph()
    graph.add_nodes_from(automaton.states)
    graph.add_edges_from((q, t) for q, row in table.items() for t in row.values())
    live = set(finals)
    for q in finals:
        live |= nx.ancestors(graph, q)

    start = automaton.start_state
    order: List[State] = [start] if start is not None and start in live else []
    index: Dict[State, int] = {q: i for i, q in enumerate(order)}
    rows: List[List[Optional[int]]] = []
    position = 0
    while position < len(order):
        q = order[position]
        position += 1
        row: List[Optional[int]] = []
        for name in names:
            t = table.get(q, {}).get(name)
            if t is None or t not in live:
                row.append(None)
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
            row.append(index[t])
        rows.append(row)

    sink = len(order)
    if not order or any(t is None for row in rows for t in row):
        rows = [[sink if t is None else t for t in row] for row in rows]
        rows.append([sink] * len(alphabet))
    return Dfa(
        alphabet=alphabet,
        transitions=tuple(tuple(row) for row in rows),
        initial=0,
        accepting=frozenset(index[q] for q in finals if q in index),
        pattern=pattern,
    )


def dfa_from_table(
    alphabet: Sequence[str],
    table: Dict[int, Dict[str, int]],
    initial: int,
    accepting: Iterable[int],
    pattern: Optional[str] = None,
) -> Dfa:
    """Build a Dfa from a nested ``{state: {symbol: state}}`` mapping."""
    alphabet = tuple(alphabet)
    n = len(table)
    return Dfa(
        alphabet=alphabet,
        transitions=tuple(tuple(table[q][a] for a in alphabet) for q in range(n)),
        initial=initial,
        accepting=frozenset(accepting),
        pattern=pattern,
    )
