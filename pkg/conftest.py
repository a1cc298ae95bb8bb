"""Shared fixtures: the named example systems and frames."""

import pytest

from src.synthesis.interfaces import Frame
from src.timecore.interfaces import DynSystem, TimeMonoid

SYS_CYC2_DOC = """\
time nat
states s0 s1
step 1: s0->s1 s1->s0
label p: s0
"""

SYS_ABS_DOC = """\
time nat
states a b
step 1: a->b b->b
label p: b
"""

SYS_DFA_DOC = """\
time word x
states e o
step x: e->o o->e
label acc: e
"""

FRM_BAD_DOC = """\
worlds a b c
edge a a
edge a b
edge a c
edge b a
edge b b
edge b c
edge c c
"""


def frame(worlds, *edges, reflexive=True):
    relation = set(edges)
    if reflexive:
        relation |= {(w, w) for w in worlds}
    return Frame(worlds=tuple(worlds), relation=frozenset(relation))


@pytest.fixture
def sys_cyc2():
    return DynSystem.build(TimeMonoid.nat(), ['s0', 's1'], {1: {'s0': 's1', 's1': 's0'}}, {'p': ['s0']})


@pytest.fixture
def sys_abs():
    return DynSystem.build(TimeMonoid.nat(), ['a', 'b'], {1: {'a': 'b', 'b': 'b'}}, {'p': ['b']})


@pytest.fixture
def sys_chain3():
    """a -> b -> c -> c with p only at c."""
    return DynSystem.build(
        TimeMonoid.nat(), ['a', 'b', 'c'], {1: {'a': 'b', 'b': 'c', 'c': 'c'}}, {'p': ['c']}
    )


@pytest.fixture
def sys_dfa():
    return DynSystem.build(TimeMonoid.word(['x']), ['e', 'o'], {'x': {'e': 'o', 'o': 'e'}}, {'acc': ['e']})


@pytest.fixture
def frm_chain():
    return frame(['a', 'b'], ('a', 'b'))


@pytest.fixture
def frm_clique2():
    return frame(['a', 'b'], ('a', 'b'), ('b', 'a'))


@pytest.fixture
def frm_bad():
    return frame(['a', 'b', 'c'], ('a', 'b'), ('b', 'a'), ('a', 'c'), ('b', 'c'))


@pytest.fixture
def fork_frame():
    return frame(['x', 'y', 'z'], ('x', 'y'), ('x', 'z'))
