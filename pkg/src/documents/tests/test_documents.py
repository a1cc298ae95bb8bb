import pytest

from conftest import FRM_BAD_DOC, SYS_ABS_DOC, SYS_CYC2_DOC, SYS_DFA_DOC
from src.documents import (
    format_formula,
    parse_formula,
    parse_frame,
    parse_system,
    print_frame,
    print_system,
)
from src.errors import (
    DocumentSyntaxError,
    FormulaSyntaxError,
    NonBijectiveStepError,
    PartialStepError,
    UnknownStateError,
)
from src.formula import (
    And,
    Atom,
    Box,
    Chg,
    Eat,
    Implies,
    MinDurIncl,
    NablaMulti,
    NablaOrbit,
    NextVia,
    Not,
    Or,
    Top,
    Until,
    Zip,
)
from src.timecore import TimeMonoid, TimeVariant
from src.timecore.generators import random_systems

p, q, acc = Atom('p'), Atom('q'), Atom('acc')


def test_parse_named_systems(sys_cyc2, sys_abs, sys_dfa):
    assert parse_system(SYS_CYC2_DOC) == sys_cyc2
    assert parse_system(SYS_ABS_DOC) == sys_abs
    assert parse_system(SYS_DFA_DOC) == sys_dfa


def test_print_is_canonical(sys_cyc2, sys_dfa):
    assert print_system(sys_cyc2) == SYS_CYC2_DOC
    assert print_system(sys_dfa) == SYS_DFA_DOC


def test_comments_blank_lines_and_empty_labels():
    sys = parse_system("# a fixed point\ntime nat  # unit steps\n\nstates a\nstep 1: a->a\nlabel p:\n")
    assert sys.states == ('a',)
    assert sys.labels == {'p': frozenset()}
    assert print_system(sys) == "time nat\nstates a\nstep 1: a->a\nlabel p:\n"


def test_int_and_free_documents():
    sys = parse_system("time int\nstates a b\nstep 1: a->b b->a\n")
    assert sys.time.variant == TimeVariant.INT and sys.steps[-1] == {'a': 'b', 'b': 'a'}
    assert print_system(sys) == "time int\nstates a b\nstep 1: a->b b->a\n"
    doc = "time free 2\nstates a b\nstep 0: a->b b->a\nstep 1: a->a b->b\n"
    sys = parse_system(doc)
    assert sys.time == TimeMonoid.free(2)
    assert print_system(sys) == doc


@pytest.mark.parametrize('doc, line', [
    ("time fortnight\nstates a\n", 1),
    ("time nat\nstep 1: a->a\nstates a\n", 2),
    ("time nat\nstates a\nstep 1: a-a\n", 3),
    ("time nat\nstates a\nstep 1 a->a\n", 3),
    ("time int\nstates a\nstep -1: a->a\n", 3),
    ("time nat\nstates a\nstep 1: a->a\nstep 1: a->a\n", 4),
    ("time nat\ntime int\n", 2),
    ("time nat\nstates a\nwobble\n", 3),
    ("states a\n", 0),
    ("time word x x\nstates a\n", 1),
])
def test_document_syntax_errors(doc, line):
    with pytest.raises(DocumentSyntaxError) as excinfo:
        parse_system(doc)
    assert excinfo.value.line == line


def test_system_errors_from_validation():
    with pytest.raises(UnknownStateError) as excinfo:
        parse_system("time nat\nstates a b\nstep 1: a->b b->c\n")
    assert 'line 3' in str(excinfo.value)
    with pytest.raises(PartialStepError):
        parse_system("time nat\nstates a b\nstep 1: a->b\n")
    with pytest.raises(NonBijectiveStepError):
        parse_system("time int\nstates a b\nstep 1: a->b b->b\n")


def test_printed_systems_parse_back():
    for sys in random_systems(29, 40):
        assert parse_system(print_system(sys)) == sys


def test_frames(frm_bad):
    assert parse_frame(FRM_BAD_DOC) == frm_bad
    assert print_frame(frm_bad) == FRM_BAD_DOC


def test_frame_errors():
    with pytest.raises(DocumentSyntaxError) as excinfo:
        parse_frame("edge a b\nworlds a b\n")
    assert excinfo.value.line == 1
    with pytest.raises(DocumentSyntaxError):
        parse_frame("worlds a\nedge a\n")
    with pytest.raises(DocumentSyntaxError):
        parse_frame("# nothing\n")
    with pytest.raises(UnknownStateError):
        parse_frame("worlds a b\nedge a c\n")


@pytest.mark.parametrize('text, expected', [
    ("p -> G p", Implies(p, Box(p))),
    ("zip(p; ~p) | zip(~p; p)", Or([Zip(p, Not(p)), Zip(Not(p), p)])),
    ("eat(/(xx)*/; acc; ~acc)", Eat('(xx)*', acc, Not(acc))),
    ("chg(1; ~p; p; p)", Chg(1, Not(p), p, p)),
    ("X[2] p", NextVia(2, p)),
    ("X[xy] p", NextVia('xy', p)),
    ("nablam{x: p, ~: q}", NablaMulti([('x', p), ('~', q)])),
    ("nabla{}", NablaOrbit([])),
    ("nabla{p, true}", NablaOrbit([p, Top()])),
    ("mind'(2; p)", MinDurIncl(2, p)),
    ("U(~p; p)", Until(Not(p), p)),
    ("p & q | ~p -> q", Implies(Or([And([p, q]), Not(p)]), q)),
    ("p -> q -> p", Implies(p, Implies(q, p))),
])
def test_parse_formula(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize('text, position', [
    ("p &", 3),
    ("p q", 2),
    ("zip(p q)", 6),
    ("G", 1),
    ("p'", 1),
    ("nabla", 5),
])
def test_formula_syntax_errors(text, position):
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse_formula(text)
    assert excinfo.value.position == position


def test_operator_words_are_not_atoms():
    for text in ('true & F', 'zip', 'chg & p', 'U'):
        with pytest.raises(FormulaSyntaxError):
            parse_formula(text)


@pytest.mark.parametrize('text', [
    "(p -> q) -> ~(p & q)",
    "(p | q) | G F p",
    "~~p & X[3] (p | q)",
    "nablam{x: p, ~: q -> p}",
    "eat(/x|y*/; acc; true) & chg(0; p; q; false)",
    "maxd'(4; p) | mind(1; U(p; q))",
])
def test_format_formula_parses_back(text):
    f = parse_formula(text)
    assert parse_formula(format_formula(f)) == f


def test_keyword_prefixes_are_atoms():
    assert parse_formula("mindful & p") == And([Atom('mindful'), p])
    assert parse_formula("zipper | Until") == Or([Atom('zipper'), Atom('Until')])
    assert parse_formula("maxd_2") == Atom('maxd_2')
