"""Text formats: systems (.dyn), frames (.kf) and formulas."""

from .frame_doc import parse_frame, print_frame
from .formula_text import format_formula, parse_formula
from .system_doc import parse_system, print_system

__all__ = [
    'format_formula', 'parse_formula', 'parse_frame', 'parse_system',
    'print_frame', 'print_system',
]
