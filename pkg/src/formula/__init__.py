"""Formula syntax, desugaring and regular languages for the consumption operator."""

from .ast import *  # noqa: F401,F403
from .ast import children, conjunction, depth, disjunction, subformulas
from .automata import Dfa, dfa_from_table, from_pyformlang
from .desugar import desugar
from .regex import regex_to_dfa
