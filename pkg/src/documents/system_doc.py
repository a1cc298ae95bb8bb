"""The ``.dyn`` system format.

    # comments run to end of line
    time nat | time int | time word x y ... | time free K
    states s0 s1 ...
    step <generator>: s0->s1 s1->s0 ...
    label p: s0 s2 ...

``time`` and ``states`` come before any ``step`` or ``label`` line. Int files
declare only ``step 1``; the -1 step is derived.
"""

import logging
from typing import Dict, List, Optional, Tuple

from src.errors import DocumentSyntaxError, UnknownStateError
from src.timecore.interfaces import DynSystem, Generator, TimeMonoid, TimeVariant

logger = logging.getLogger(__name__)


def content_lines(text: str) -> List[Tuple[int, str]]:
    """(line number, text) pairs with comments and blank lines removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def split_header(line: str, number: int) -> Tuple[str, str]:
    """Split ``keyword arg: body`` into (``keyword arg``, body)."""
    if ':' not in line:
        raise DocumentSyntaxError(f"Expected ':' in '{line}'", number)
    head, body = line.split(':', 1)
    return head.strip(), body.strip()


def _parse_time(words: List[str], number: int) -> TimeMonoid:
    if not words:
        raise DocumentSyntaxError("Missing time variant", number)
    variant, args = words[0], words[1:]
    if variant in ('nat', 'int'):
        if args:
            raise DocumentSyntaxError(f"'time {variant}' takes no arguments", number)
        return TimeMonoid.nat() if variant == 'nat' else TimeMonoid.int_()
    if variant == 'word':
        if not args:
            raise DocumentSyntaxError("'time word' needs at least one symbol", number)
        if len(set(args)) != len(args):
            raise DocumentSyntaxError(f"Duplicate symbols in 'time word {' '.join(args)}'", number)
        return TimeMonoid.word(args)
    if variant == 'free':
        if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
            raise DocumentSyntaxError("'time free' takes one positive generator count", number)
        return TimeMonoid.free(int(args[0]))
    raise DocumentSyntaxError(f"Unknown time variant '{variant}'", number)


def _parse_generator(time: TimeMonoid, raw: str, number: int) -> Generator:
    if time.variant == TimeVariant.WORD:
        if raw not in time.alphabet:
            raise DocumentSyntaxError(f"'{raw}' is not a symbol of {time.describe()}", number)
        return raw
    try:
        generator = int(raw)
    except ValueError:
        raise DocumentSyntaxError(f"Step generator '{raw}' is not an integer", number)
    allowed = (1,) if time.variant == TimeVariant.INT else time.generators
    if generator not in allowed:
        raise DocumentSyntaxError(f"'{raw}' is not a declarable step of {time.describe()}", number)
    return generator


class _SystemReader:
    def __init__(self):
        self.time: Optional[TimeMonoid] = None
        self.states: Optional[List[str]] = None
        self.steps: Dict[Generator, Dict[str, str]] = {}
        self.labels: Dict[str, List[str]] = {}

    def known(self, state: str, number: int) -> str:
        if state not in self.states:
            raise UnknownStateError(state, f"line {number}")
        return state

    def header_ready(self, keyword: str, number: int) -> None:
        if self.time is None or self.states is None:
            raise DocumentSyntaxError(f"'{keyword}' before 'time' and 'states'", number)

    def read(self, number: int, line: str) -> None:
        keyword, _, rest = line.partition(' ')
        if keyword == 'time':
            if self.time is not None:
                raise DocumentSyntaxError("Duplicate 'time' line", number)
            self.time = _parse_time(rest.split(), number)
        elif keyword == 'states':
            if self.states is not None:
                raise DocumentSyntaxError("Duplicate 'states' line", number)
            self.states = rest.split()
            if not self.states:
                raise DocumentSyntaxError("'states' needs at least one state", number)
        elif keyword == 'step':
            self.header_ready(keyword, number)
            head, body = split_header(line, number)
            generator = _parse_generator(self.time, head[len('step'):].strip(), number)
            if generator in self.steps:
                raise DocumentSyntaxError(f"Duplicate step {generator}", number)
            table: Dict[str, str] = {}
            for pair in body.split():
                source, arrow, target = pair.partition('->')
                if not arrow or not source or not target:
                    raise DocumentSyntaxError(f"Malformed mapping '{pair}'", number)
                if source in table:
                    raise DocumentSyntaxError(f"State '{source}' mapped twice", number)
                table[self.known(source, number)] = self.known(target, number)
            self.steps[generator] = table
        elif keyword == 'label':
            self.header_ready(keyword, number)
            head, body = split_header(line, number)
            atom = head[len('label'):].strip()
            if not atom.isidentifier():
                raise DocumentSyntaxError(f"Bad atom name '{atom}'", number)
            if atom in self.labels:
                raise DocumentSyntaxError(f"Duplicate label '{atom}'", number)
            self.labels[atom] = [self.known(s, number) for s in body.split()]
        else:
            raise DocumentSyntaxError(f"Unknown keyword '{keyword}'", number)


def parse_system(text: str) -> DynSystem:
    reader = _SystemReader()
    for number, line in content_lines(text):
        reader.read(number, line)
    if reader.time is None or reader.states is None:
        raise DocumentSyntaxError("Document needs 'time' and 'states' lines", 0)
    sys = DynSystem.build(reader.time, reader.states, reader.steps, reader.labels)
    logger.debug(f"Parsed system: {len(sys.states)} states, {sys.time.describe()}")
    return sys


def _format_time(time: TimeMonoid) -> str:
    if time.variant == TimeVariant.WORD:
        return f"time word {' '.join(time.alphabet)}"
    if time.variant == TimeVariant.FREE_IDX:
        return f"time free {time.size}"
    return f"time {time.variant.value}"


def print_system(sys: DynSystem) -> str:
    lines = [_format_time(sys.time), f"states {' '.join(sys.states)}"]
    declared = (1,) if sys.time.variant == TimeVariant.INT else sys.time.generators
    for generator in declared:
        table = sys.steps[generator]
        mappings = ' '.join(f"{s}->{table[s]}" for s in sys.states)
        lines.append(f"step {generator}: {mappings}")
    for atom, members in sys.labels.items():
        lines.append(f"label {atom}: {' '.join(sys.ordered(members))}".rstrip())
    return '\n'.join(lines) + '\n'
