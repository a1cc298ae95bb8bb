"""Rewrite derived temporal operators into the core nabla forms."""

from typing import Optional, Sequence

from .ast import (
    And,
    Atom,
    Bot,
    Box,
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


def desugar(f: Formula, generators: Optional[Sequence] = None) -> Formula:
    """Rewrite G, F, X, X[t] and the duration operators.

    ``generators`` is the declared generator set used to fill the other
    entries of X[t] with true; without it the multi-step argument holds
    the single entry t (missing entries already default to true).
    """
    d = lambda g: desugar(g, generators)

    if isinstance(f, Box):
        inner = d(f.operand)
        return Or([NablaOrbit([inner]), NablaOrbit([])])
    if isinstance(f, Diamond):
        return NablaOrbit([d(f.operand), Top()])
    if isinstance(f, Next):
        return NablaStep(d(f.operand))
    if isinstance(f, NextVia):
        keys = [f.t] + [g for g in (generators or ()) if g != f.t]
        inner = d(f.operand)
        return NablaMulti([(key, inner if key == f.t else Top()) for key in keys])
    if isinstance(f, MinDur):
        return Chg(f.t, d(f.operand), Top(), Top())
    if isinstance(f, MinDurIncl):
        inner = d(f.operand)
        return Chg(f.t, inner, inner, Top())
    if isinstance(f, MaxDur):
        return Chg(f.t, Top(), Top(), Not(d(f.operand)))
    if isinstance(f, MaxDurExcl):
        negated = Not(d(f.operand))
        return Chg(f.t, Top(), negated, negated)

    if isinstance(f, (Atom, Top, Bot)):
        return f
    if isinstance(f, Not):
        return Not(d(f.operand))
    if isinstance(f, Prev):
        return Prev(d(f.operand))
    if isinstance(f, Implies):
        return Implies(d(f.left), d(f.right))
    if isinstance(f, And):
        return And([d(g) for g in f.items])
    if isinstance(f, Or):
        return Or([d(g) for g in f.items])
    if isinstance(f, NablaStep):
        return NablaStep(d(f.operand), f.duration)
    if isinstance(f, NablaMulti):
        return NablaMulti([(key, d(g)) for key, g in f.arg])
    if isinstance(f, NablaOrbit):
        return NablaOrbit([d(g) for g in f.items])
    if isinstance(f, Zip):
        return Zip(d(f.even), d(f.odd))
    if isinstance(f, Eat):
        return Eat(f.pattern, d(f.accept), d(f.reject), f.dfa)
    if isinstance(f, Chg):
        return Chg(f.t, d(f.before), d(f.at), d(f.after))
    if isinstance(f, Until):
        return Until(d(f.left), d(f.right))
    raise TypeError(f"Unsupported formula node: {f!r}")
