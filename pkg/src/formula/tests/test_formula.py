import itertools
import random
import re

import pytest

from src.errors import RegexSyntaxError
from src.formula import (
    And,
    Atom,
    Box,
    Chg,
    Diamond,
    Dfa,
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
    Top,
    Zip,
    desugar,
    dfa_from_table,
    from_pyformlang,
    regex_to_dfa,
    subformulas,
)
from src.formula.generators import random_formula, random_regex

p, q = Atom('p'), Atom('q')


def words(alphabet, max_length):
    for n in range(max_length + 1):
        for word in itertools.product(alphabet, repeat=n):
            yield ''.join(word)


def python_regex(pattern):
    return re.compile(pattern.replace('~', '()'))


def test_desugar_orbit_modalities():
    assert desugar(Box(p)) == Or([NablaOrbit([p]), NablaOrbit([])])
    assert desugar(Diamond(p)) == NablaOrbit([p, Top()])
    assert desugar(Next(p)) == NablaStep(p)


def test_desugar_durations():
    assert desugar(MinDur(2, p)) == Chg(2, p, Top(), Top())
    assert desugar(MinDurIncl(2, p)) == Chg(2, p, p, Top())
    assert desugar(MaxDur(3, p)) == Chg(3, Top(), Top(), Not(p))
    assert desugar(MaxDurExcl(3, p)) == Chg(3, Top(), Not(p), Not(p))


def test_desugar_next_via_fills_other_generators():
    f = desugar(NextVia('x', p), generators=('x', 'y'))
    assert f == NablaMulti([('x', p), ('y', Top())])
    assert desugar(NextVia(2, p)) == NablaMulti({2: p})


def test_desugar_recurses_and_keeps_core_forms():
    f = Implies(p, Box(Diamond(q)))
    assert desugar(f) == Implies(p, Or([NablaOrbit([NablaOrbit([q, Top()])]), NablaOrbit([])]))
    core = Zip(NablaStep(p), Chg(1, p, q, Top()))
    assert desugar(core) == core


def test_desugar_is_idempotent():
    rng = random.Random(5)
    for _ in range(200):
        f = random_formula(rng, ('p', 'q'), depth=4, trajectory=True)
        once = desugar(f)
        assert desugar(once) == once


def test_nabla_orbit_is_a_set():
    assert NablaOrbit([p, q, p]) == NablaOrbit([p, q])


def test_subformulas_post_order():
    f = Implies(p, Box(p))
    assert subformulas(f) == [p, Box(p), f]
    assert subformulas(p) == [p]
    assert subformulas(And([p, p])) == [p, And([p, p])]


def test_even_length_words():
    dfa = regex_to_dfa('(xx)*', ['x'])
    assert dfa.accepts('') and dfa.accepts('xx') and dfa.accepts('xxxx')
    assert not dfa.accepts('x') and not dfa.accepts('xxx')
    assert len(dfa.states) == 2


def test_empty_word_pattern():
    dfa = regex_to_dfa('~', ['x'])
    assert [w for w in words('x', 4) if dfa.accepts(w)] == ['']


def test_alternation():
    dfa = regex_to_dfa('x|y', ['x', 'y'])
    assert [w for w in words('xy', 2) if dfa.accepts(w)] == ['x', 'y']


@pytest.mark.parametrize('pattern, alphabet, position', [
    ('(x', ['x'], 2),
    ('z', ['x'], 0),
    ('x|', ['x'], 2),
    ('', ['x'], 0),
    ('*x', ['x'], 0),
])
def test_regex_syntax_errors(pattern, alphabet, position):
    with pytest.raises(RegexSyntaxError) as excinfo:
        regex_to_dfa(pattern, alphabet)
    assert excinfo.value.position == position


def test_regex_matches_reference_matcher():
    rng = random.Random(17)
    for _ in range(150):
        alphabet = ('x', 'y', 'z')[:rng.randint(1, 3)]
        pattern = random_regex(rng, alphabet)
        dfa = regex_to_dfa(pattern, alphabet)
        reference = python_regex(pattern)
        for word in words(alphabet, 6 if len(alphabet) < 3 else 5):
            assert dfa.accepts(word) == bool(reference.fullmatch(word)), (pattern, word)


def test_minimize_and_language_equality():
    # four states counting length mod 4, accepting at 0 and 2
    table = {i: {'x': (i + 1) % 4} for i in range(4)}
    counter = dfa_from_table(['x'], table, 0, [0, 2])
    minimal = counter.minimize()
    assert len(minimal.states) == 2
    assert minimal.language_equals(regex_to_dfa('(xx)*', ['x']))
    assert not minimal.language_equals(regex_to_dfa('x*', ['x']))


def test_dfa_requires_total_transitions():
    with pytest.raises(ValueError):
        Dfa(alphabet=('x', 'y'), transitions=((0,),))
    with pytest.raises(ValueError):
        Dfa(alphabet=('x',), transitions=((0,),), accepting=frozenset({3}))


def test_compiled_dfa_is_total_with_one_sink():
    dfa = regex_to_dfa('(xx)*', ['x', 'y'])
    assert len(dfa.states) == 3
    sink = dfa.step(dfa.initial, 'y')
    assert sink not in dfa.accepting
    assert all(dfa.step(sink, a) == sink for a in dfa.alphabet)


def test_pyformlang_round_trip_keeps_the_language():
    dfa = regex_to_dfa('x(y|x)*', ['x', 'y'])
    again = from_pyformlang(dfa.to_pyformlang(), dfa.alphabet)
    assert again.language_equals(dfa)
    for word in words('xy', 4):
        assert again.accepts(word) == dfa.accepts(word)


def test_minimize_merges_dead_states():
    # states 1 and 2 can never accept
    table = {0: {'x': 1, 'y': 0}, 1: {'x': 2, 'y': 2}, 2: {'x': 1, 'y': 1}}
    dfa = dfa_from_table(['x', 'y'], table, 0, [0])
    minimal = dfa.minimize()
    assert len(minimal.states) == 2
    assert minimal.language_equals(regex_to_dfa('y*', ['x', 'y']))


def test_language_equals_ignores_alphabet_order():
    assert regex_to_dfa('xy*', ['x', 'y']).language_equals(regex_to_dfa('xy*', ['y', 'x']))
    assert not regex_to_dfa('x', ['x']).language_equals(regex_to_dfa('x', ['x', 'y']))
