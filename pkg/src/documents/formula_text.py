"""Surface syntax for formulas.

Precedence from tightest: prefix operators (``~ X X[t] Y G F``), ``&``, ``|``,
``->`` (right associative). Bracketed forms::

    nabla{f, g}             nablam{t1: f, t2: g}
    zip(f; g)               eat(/regex/; f; g)
    chg(t; f; g; h)         mind(t; f)  mind'(t; f)  maxd(t; f)  maxd'(t; f)
    U(f; g)

Time literals (``X[t]``, ``nablam`` keys) are integers, words written as
symbol runs (``xy``), space-separated generator indices, or ``~`` for the
empty word; they are interpreted against the system's time monoid.
"""

import re
from typing import Any

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from src.errors import FormulaSyntaxError
from src.formula.ast import (
    And,
    Atom,
    Box,
    Bot,
    Chg,
    Diamond,
    Eat,
    Formula,
    Implies,
    MaxDur,
    MaxDurExcl,
    MinDur,
    MinDurIncl,
    NablaMulti,
    NablaOrbit,
    NablaStep,
    Next,
    NextVia,
    Not,
    Or,
    Prev,
    Top,
    Until,
    Zip,
)

_GRAMMAR = r"""
    ?start: implication

    ?implication: disjunction
                | disjunction "->" implication                          -> implies

    ?disjunction: conjunction
                | conjunction ("|" conjunction)+                        -> or_

    ?conjunction: unary
                | unary ("&" unary)+                                    -> and_

    ?unary: "~" unary                                                   -> not_
          | "X" unary                                                   -> next_
          | "X" TIME unary                                              -> next_via
          | "Y" unary                                                   -> prev
          | "G" unary                                                   -> box
          | "F" unary                                                   -> diamond
          | primary

    ?primary: "(" implication ")"
            | "true"                                                    -> top
            | "false"                                                   -> bot
            | "nabla" "{" (implication ("," implication)*)? "}"         -> nabla
            | "nablam" "{" (entry ("," entry)*)? "}"                    -> nablam
            | "zip" "(" implication ";" implication ")"                 -> zip_
            | "U" "(" implication ";" implication ")"                   -> until
            | "eat" "(" REGEX ";" implication ";" implication ")"       -> eat
            | "chg" "(" INT ";" implication ";" implication ";" implication ")" -> chg
            | DURATION "(" INT ";" implication ")"                      -> duration
            | NAME                                                      -> atom

    entry: KEY ":" implication

    DURATION.2: /(mind|maxd)'?(?![A-Za-z0-9_])/
    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    INT: /-?\d+/
    TIME: /\[[^\]]*\]/
    KEY: /[^\s{},:;()][^{},:;()]*/
    REGEX: /\/[^\/]*\//

    %import common.WS
    %ignore WS
"""

_INT = re.compile(r"-?\d+")
DURATION_WORDS = {'mind': MinDur, "mind'": MinDurIncl, 'maxd': MaxDur, "maxd'": MaxDurExcl}


def _time_literal(raw: str) -> Any:
    raw = raw.strip()
    return int(raw) if _INT.fullmatch(raw) else raw


class _ToFormula(Transformer):
    """Builds formula nodes from the parse tree, bottom up."""

    def implies(self, items):
        return Implies(*items)

    def or_(self, items):
        return Or(list(items))

    def and_(self, items):
        return And(list(items))

    def not_(self, items):
        return Not(items[0])

    def next_(self, items):
        return Next(items[0])

    def next_via(self, items):
        time, operand = items
        return NextVia(_time_literal(time[1:-1]), operand)

    def prev(self, items):
        return Prev(items[0])

    def box(self, items):
        return Box(items[0])

    def diamond(self, items):
        return Diamond(items[0])

    def top(self, _):
        return Top()

    def bot(self, _):
        return Bot()

    def nabla(self, items):
        return NablaOrbit(list(items))

    def nablam(self, items):
        return NablaMulti(list(items))

    def entry(self, items):
        key, f = items
        return _time_literal(key), f

    def zip_(self, items):
        return Zip(*items)

    def until(self, items):
        return Until(*items)

    def eat(self, items):
        regex, accept, reject = items
        return Eat(str(regex)[1:-1], accept, reject)

    def chg(self, items):
        t, before, at, after = items
        return Chg(int(t), before, at, after)

    def duration(self, items):
        word, t, operand = items
        return DURATION_WORDS[str(word)](int(t), operand)

    def atom(self, items):
        return Atom(str(items[0]))


_parser = Lark(_GRAMMAR, parser='lalr', propagate_positions=True)


def _syntax_error(e: UnexpectedInput, text: str) -> FormulaSyntaxError:
    if isinstance(e, UnexpectedToken):
        if e.token.type == '$END':
            return FormulaSyntaxError("Unexpected end of input", len(text))
        return FormulaSyntaxError(f"Unexpected '{e.token}'", e.token.start_pos)
    if isinstance(e, UnexpectedCharacters):
        return FormulaSyntaxError(f"Unexpected '{text[e.pos_in_stream]}'", e.pos_in_stream)
    return FormulaSyntaxError("Unexpected end of input", len(text))


def parse_formula(text: str) -> Formula:
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise _syntax_error(e, text) from None
    try:
        return _ToFormula().transform(tree)
    except VisitError as e:
        raise FormulaSyntaxError(str(e.orig_exc), getattr(e.obj.meta, 'start_pos', 0)) from e


def format_time(t: Any) -> str:
    if isinstance(t, tuple):
        if not t:
            return '~'
        if all(isinstance(symbol, int) for symbol in t):
            return ' '.join(str(symbol) for symbol in t)
        return ''.join(t)
    return str(t)


# binding strength: higher binds tighter
_IMPLIES, _OR, _AND, _PREFIX = 1, 2, 3, 4


def format_formula(f: Formula, level: int = 0) -> str:
    """Canonical text; ``parse_formula(format_formula(f)) == f`` for parsed formulas."""
    def wrap(text: str, own: int) -> str:
        return f"({text})" if own < level else text

    fmt = format_formula
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return 'true'
    if isinstance(f, Bot):
        return 'false'
    if isinstance(f, Not):
        return '~' + fmt(f.operand, _PREFIX)
    if isinstance(f, Implies):
        return wrap(f"{fmt(f.left, _OR)} -> {fmt(f.right, _IMPLIES)}", _IMPLIES)
    if isinstance(f, Or):
        if not f.items:
            return 'false'
        return wrap(' | '.join(fmt(g, _AND) for g in f.items), _OR)
    if isinstance(f, And):
        if not f.items:
            return 'true'
        return wrap(' & '.join(fmt(g, _PREFIX) for g in f.items), _AND)
    if isinstance(f, (Next, Prev, Box, Diamond)):
        word = {Next: 'X', Prev: 'Y', Box: 'G', Diamond: 'F'}[type(f)]
        return f"{word} {fmt(f.operand, _PREFIX)}"
    if isinstance(f, NablaStep):
        prefix = 'X' if f.duration is None else f"X[{format_time(f.duration)}]"
        return f"{prefix} {fmt(f.operand, _PREFIX)}"
    if isinstance(f, NextVia):
        return f"X[{format_time(f.t)}] {fmt(f.operand, _PREFIX)}"
    if isinstance(f, NablaOrbit):
        return 'nabla{' + ', '.join(fmt(g) for g in f.items) + '}'
    if isinstance(f, NablaMulti):
        return 'nablam{' + ', '.join(f"{format_time(k)}: {fmt(g)}" for k, g in f.arg) + '}'
    if isinstance(f, Zip):
        return f"zip({fmt(f.even)}; {fmt(f.odd)})"
    if isinstance(f, Until):
        return f"U({fmt(f.left)}; {fmt(f.right)})"
    if isinstance(f, Eat):
        return f"eat(/{f.pattern}/; {fmt(f.accept)}; {fmt(f.reject)})"
    if isinstance(f, Chg):
        return f"chg({f.t}; {fmt(f.before)}; {fmt(f.at)}; {fmt(f.after)})"
    for word, cls in DURATION_WORDS.items():
        if type(f) is cls:
            return f"{word}({f.t}; {fmt(f.operand)})"
    raise TypeError(f"Cannot format {type(f).__name__}")
