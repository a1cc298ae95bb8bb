"""The ``.kf`` frame format: a ``worlds`` line followed by ``edge x y`` lines."""

from typing import List, Optional, Set, Tuple

from src.errors import DocumentSyntaxError, UnknownStateError
from src.synthesis.interfaces import Frame

from .system_doc import content_lines


def parse_frame(text: str) -> Frame:
    worlds: Optional[List[str]] = None
    edges: Set[Tuple[str, str]] = set()
    for number, line in content_lines(text):
        keyword, *args = line.split()
        if keyword == 'worlds':
            if worlds is not None:
                raise DocumentSyntaxError("Duplicate 'worlds' line", number)
            if not args or len(set(args)) != len(args):
                raise DocumentSyntaxError("'worlds' needs distinct world names", number)
            worlds = args
        elif keyword == 'edge':
            if worlds is None:
                raise DocumentSyntaxError("'edge' before 'worlds'", number)
            if len(args) != 2:
                raise DocumentSyntaxError("'edge' takes exactly two worlds", number)
            for world in args:
                if world not in worlds:
                    raise UnknownStateError(world, f"line {number}")
            edges.add((args[0], args[1]))
        else:
            raise DocumentSyntaxError(f"Unknown keyword '{keyword}'", number)
    if worlds is None:
        raise DocumentSyntaxError("Document needs a 'worlds' line", 0)
    return Frame(worlds=tuple(worlds), relation=frozenset(edges))


def print_frame(fr: Frame) -> str:
    lines = [f"worlds {' '.join(fr.worlds)}"]
    lines.extend(f"edge {x} {y}" for x, y in fr.edges())
    return '\n'.join(lines) + '\n'
