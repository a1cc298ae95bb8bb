"""Regular expressions over a time alphabet, compiled to minimal total DFAs.

Grammar::

    alternation := concat ('|' concat)*
    concat      := starred*
    starred     := atom '*'*
    atom        := symbol | '~' | '(' alternation ')'

``~`` is the empty word; an empty concatenation is not allowed. Symbols are
single characters of the alphabet; whitespace is ignored.

Patterns are checked here and rewritten into pyformlang's regex syntax
(symbols renamed ``s<i>``, ``$`` for the empty word, explicit ``.``), which
builds the epsilon-NFA, determinizes and minimizes.
"""

import logging
from typing import Dict, Sequence

from pyformlang.regular_expression import Regex

from src.errors import RegexSyntaxError

from .automata import Dfa, from_pyformlang, symbol_name

logger = logging.getLogger(__name__)

METACHARS = set('|*()~')


class _Translator:
    def __init__(self, pattern: str, alphabet: Sequence[str]):
        self.text = pattern
        self.names: Dict[str, str] = {a: symbol_name(i) for i, a in enumerate(alphabet)}
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def translate(self) -> str:
        regex = self.alternation()
        if self.peek():
            raise RegexSyntaxError(f"Unexpected '{self.peek()}'", self.pos)
        return regex

    def alternation(self) -> str:
        branches = [self.concat()]
        while self.peek() == '|':
            self.pos += 1
            branches.append(self.concat())
        return branches[0] if len(branches) == 1 else '(' + ' | '.join(branches) + ')'

    def concat(self) -> str:
        parts = []
        while self.peek() and self.peek() not in '|)':
            parts.append(self.starred())
        if not parts:
            raise RegexSyntaxError("Empty expression (use '~' for the empty word)", self.pos)
        return parts[0] if len(parts) == 1 else '(' + ' . '.join(parts) + ')'

    def starred(self) -> str:
        regex = self.atom()
        while self.peek() == '*':
            self.pos += 1
            regex = f"({regex})*"
        return regex

    def atom(self) -> str:
        char = self.peek()
        if char == '(':
            self.pos += 1
            regex = self.alternation()
            if self.peek() != ')':
                raise RegexSyntaxError("Missing ')'", self.pos)
            self.pos += 1
            return regex
        if char == '~':
            self.pos += 1
            return '$'
        if char in METACHARS:
            raise RegexSyntaxError(f"Unexpected '{char}'", self.pos)
        if char not in self.names:
            raise RegexSyntaxError(f"Symbol '{char}' is not in the alphabet", self.pos)
        self.pos += 1
        return self.names[char]


def regex_to_dfa(pattern: str, alphabet: Sequence[str]) -> Dfa:
    """Compile ``pattern`` to the minimal total DFA over ``alphabet``."""
    alphabet = tuple(alphabet)
    if any(len(symbol) != 1 for symbol in alphabet):
        raise RegexSyntaxError("Regular expressions need single-character symbols", 0)
    text = _Translator(pattern, alphabet).translate()
    automaton = Regex(text).to_epsilon_nfa().to_deterministic().minimize()
    dfa = from_pyformlang(automaton, alphabet, pattern)
    logger.debug(f"Compiled /{pattern}/ to {len(dfa.transitions)} states")
    return dfa
