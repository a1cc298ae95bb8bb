import random

import pytest

from src.checker import (
    eval_chg,
    eval_eat,
    eval_until,
    eval_zip,
    evaluate,
    holds_at,
    sat_result,
    valid,
)
from src.checker.oracles import language_contained, oracle_chg, oracle_until, oracle_zip, system_dfa
from src.checker.trajectory import chg_states, eat_states, until_states, zip_states
from src.coalgebra import Step, bisimilarity, build_view
from src.errors import TimeMismatchError, UnknownAtomError, UnknownStateError
from src.formula import (
    And,
    Atom,
    Bot,
    Box,
    Chg,
    Diamond,
    Eat,
    Implies,
    MaxDur,
    MinDur,
    NablaMulti,
    NablaOrbit,
    Next,
    NextVia,
    Not,
    Or,
    Prev,
    Top,
    Until,
    Zip,
    desugar,
    disjunction,
    regex_to_dfa,
)
from src.formula.generators import random_formula, random_regex
from src.timecore import DynSystem, TimeMonoid, TimeVariant, apply
from src.timecore.generators import random_system, random_systems

p, acc = Atom('p'), Atom('acc')


@pytest.fixture
def int_cycle3():
    return DynSystem.build(TimeMonoid.int_(), ['a', 'b', 'c'], {1: {'a': 'b', 'b': 'c', 'c': 'a'}}, {'p': ['a']})


@pytest.fixture
def int_cycle2():
    return DynSystem.build(TimeMonoid.int_(), ['s0', 's1'], {1: {'s0': 's1', 's1': 's0'}}, {'p': ['s0']})


def test_stationary_set_is_invariant(sys_abs, sys_cyc2):
    assert evaluate(sys_abs, Implies(p, Box(p))) == {'a', 'b'}
    assert valid(sys_abs, Implies(p, Box(p)))
    assert evaluate(sys_cyc2, Implies(p, Box(p))) == {'s1'}


def test_two_cycle_is_bipartite(sys_cyc2):
    bipartite = Or([Zip(p, Not(p)), Zip(Not(p), p)])
    assert evaluate(sys_cyc2, bipartite) == {'s0', 's1'}
    assert eval_zip(sys_cyc2, p, Not(p)) == {'s0'}
    assert eval_zip(sys_cyc2, Not(p), p) == {'s1'}


def test_booleans_and_next(sys_cyc2):
    assert evaluate(sys_cyc2, Top()) == {'s0', 's1'}
    assert evaluate(sys_cyc2, Bot()) == frozenset()
    assert evaluate(sys_cyc2, Next(p)) == {'s1'}
    assert evaluate(sys_cyc2, NextVia(2, p)) == {'s0'}
    assert evaluate(sys_cyc2, And([p, Next(Not(p))])) == {'s0'}


def test_orbit_modalities(sys_abs):
    assert evaluate(sys_abs, Diamond(p)) == {'a', 'b'}
    assert evaluate(sys_abs, Box(p)) == {'b'}
    assert evaluate(sys_abs, NablaOrbit([p, Not(p)])) == {'a'}
    assert evaluate(sys_abs, NablaOrbit([p])) == {'b'}


def test_empty_orbit_nabla_is_unsatisfiable(sys_abs):
    assert evaluate(sys_abs, NablaOrbit([])) == frozenset()
    assert evaluate(sys_abs, Or([NablaOrbit([p]), NablaOrbit([])])) == evaluate(sys_abs, Box(p))


def test_multi_step_nabla(sys_dfa):
    assert evaluate(sys_dfa, NablaMulti({'x': acc})) == {'o'}
    assert evaluate(sys_dfa, NablaMulti({'xx': acc, '~': acc})) == {'e'}
    assert evaluate(sys_dfa, Next(acc)) == {'o'}


def test_next_needs_a_unit_step():
    sys = DynSystem.build(TimeMonoid.word(['x', 'y']), ['a'], {'x': {'a': 'a'}, 'y': {'a': 'a'}}, {'p': ['a']})
    with pytest.raises(TimeMismatchError):
        evaluate(sys, Next(p))
    assert evaluate(sys, NextVia('y', p)) == {'a'}


def test_previous_on_int_time(int_cycle3, sys_cyc2):
    assert evaluate(int_cycle3, Prev(p)) == {'b'}
    with pytest.raises(TimeMismatchError):
        evaluate(sys_cyc2, Prev(p))


def test_zip_on_int_time(int_cycle2, int_cycle3):
    assert eval_zip(int_cycle2, p, Not(p)) == {'s0'}
    assert eval_zip(int_cycle3, Top(), Top()) == {'a', 'b', 'c'}
    assert eval_zip(int_cycle3, p, Not(p)) == frozenset()


def test_eat_even_words(sys_dfa):
    assert 'e' in eval_eat(sys_dfa, '(xx)*', acc, Not(acc))
    assert eval_eat(sys_dfa, '(xx)*', acc, Not(acc)) == {'e'}
    at_least = eval_eat(sys_dfa, regex_to_dfa('(xx)*', ['x']), acc, Top())
    assert 'e' in at_least and 'o' not in at_least


def test_eat_language_of_a_state(sys_dfa):
    dfa = regex_to_dfa('(xx)*', ['x'])
    assert dfa.language_equals(system_dfa(sys_dfa, 'e', sys_dfa.labels['acc']))
    assert not dfa.language_equals(system_dfa(sys_dfa, 'o', sys_dfa.labels['acc']))
    assert language_contained(dfa, system_dfa(sys_dfa, 'e', sys_dfa.labels['acc']))


def test_eat_needs_word_time_and_matching_alphabet(sys_abs):
    with pytest.raises(TimeMismatchError):
        evaluate(sys_abs, Eat('x*', p, Top()))
    sys = DynSystem.build(TimeMonoid.word(['x']), ['a'], {'x': {'a': 'a'}}, {'p': ['a']})
    with pytest.raises(TimeMismatchError):
        eval_eat(sys, regex_to_dfa('y*', ['y']), p, Top())


def test_change_operator(sys_abs):
    assert eval_chg(sys_abs, 1, Not(p), p, p) == {'a'}
    assert 'a' not in eval_chg(sys_abs, 1, p, Top(), Top())
    assert evaluate(sys_abs, MinDur(1, Not(p))) == {'a'}
    assert evaluate(sys_abs, MaxDur(0, Not(p))) == {'a', 'b'}
    assert evaluate(sys_abs, MaxDur(0, p)) == frozenset()


def test_chg_rejects_negative_duration(sys_abs):
    with pytest.raises(TimeMismatchError):
        eval_chg(sys_abs, -1, Top(), Top(), Top())


def test_until(sys_abs):
    assert eval_until(sys_abs, Not(p), p) == {'a', 'b'}
    assert eval_until(sys_abs, Top(), Bot()) == frozenset()
    assert eval_until(sys_abs, Bot(), p) == {'b'}


def test_trajectory_operators_need_nat(int_cycle3, sys_dfa):
    with pytest.raises(TimeMismatchError):
        eval_until(int_cycle3, p, p)
    with pytest.raises(TimeMismatchError):
        eval_chg(int_cycle3, 0, p, p, p)
    with pytest.raises(TimeMismatchError):
        eval_zip(sys_dfa, acc, acc)


def test_unknown_atom_is_an_error(sys_abs):
    with pytest.raises(UnknownAtomError):
        evaluate(sys_abs, Atom('q'))


def test_holds_at(sys_cyc2):
    assert holds_at(sys_cyc2, p, 's0')
    assert not holds_at(sys_cyc2, p, 's1')
    with pytest.raises(UnknownStateError):
        holds_at(sys_cyc2, p, 's9')


def test_sat_result_memo(sys_abs):
    result = sat_result(sys_abs, Implies(p, Box(p)))
    assert result.is_closed()
    assert result.satisfying <= set(sys_abs.states)
    summary = result.get_summary()
    assert summary['satisfying'] == ['a', 'b'] and summary['failing'] == [] and summary['valid']
    assert result.lookup(p) == {'b'}


def test_desugaring_preserves_satisfaction():
    rng = random.Random(3)
    for sys in random_systems(3, 60):
        f = random_formula(rng, sys.atoms, depth=3)
        assert evaluate(sys, f) == evaluate(sys, desugar(f, sys.time.generators))


def test_nabla_orbit_matches_kripke_translation():
    rng = random.Random(8)
    for sys in random_systems(8, 60):
        a = random_formula(rng, sys.atoms, depth=2)
        assert evaluate(sys, Box(a)) == evaluate(sys, Or([NablaOrbit([a]), NablaOrbit([])]))
        assert evaluate(sys, Diamond(a)) == evaluate(sys, NablaOrbit([a, Top()]))
        members = [random_formula(rng, sys.atoms, depth=2) for _ in range(rng.randint(0, 3))]
        kripke = And([Box(disjunction(members))] + [Diamond(m) for m in members])
        assert evaluate(sys, NablaOrbit(members)) == evaluate(sys, kripke)


def test_trajectory_evaluators_agree_with_simulation():
    for sys in random_systems(21, 120, max_states=7):
        if not sys.time.is_numeric:
            continue
        left, right = sys.labels['p'], sys.labels['q']
        assert zip_states(sys, left, right) == oracle_zip(sys, left, right)
        if sys.time.variant != TimeVariant.NAT:
            continue
        assert until_states(sys, left, right) == oracle_until(sys, left, right)
        for t in range(5):
            assert chg_states(sys, t, left, right, left) == oracle_chg(sys, t, left, right, left)


def test_long_durations(sys_abs, sys_cyc2):
    assert evaluate(sys_cyc2, NextVia(10 ** 9, p)) == {'s0'}
    assert evaluate(sys_cyc2, NextVia(10 ** 9 + 1, p)) == {'s1'}
    assert eval_chg(sys_abs, 3_000_000, Top(), p, p) == {'a', 'b'}
    assert eval_chg(sys_abs, 3_000_000, Not(p), p, p) == frozenset()
    assert evaluate(sys_abs, MaxDur(3_000_000, p)) == evaluate(sys_abs, MaxDur(5, p))


def test_orbit_modalities_are_monotone():
    rng = random.Random(11)
    for sys in random_systems(11, 80):
        a = random_formula(rng, sys.atoms, depth=2)
        b = random_formula(rng, sys.atoms, depth=2)
        weaker = Or([a, b])
        assert evaluate(sys, a) <= evaluate(sys, weaker)
        assert evaluate(sys, Diamond(a)) <= evaluate(sys, Diamond(weaker))
        assert evaluate(sys, Box(a)) <= evaluate(sys, Box(weaker))


def test_step_bisimilar_states_agree_on_trajectory_operators():
    rng = random.Random(13)
    for sys in random_systems(13, 60, max_states=6, time=TimeMonoid.nat()):
        partition = bisimilarity(build_view(sys, Step()))
        a, b, c = (random_formula(rng, sys.atoms, depth=2, trajectory=True) for _ in range(3))
        formulas = [Zip(a, b), Chg(rng.randint(0, 4), a, b, c), Until(a, b)]
        for f in formulas:
            satisfying = evaluate(sys, f)
            for block in partition.blocks:
                assert len({x in satisfying for x in block}) == 1


def test_eat_matches_bounded_word_enumeration():
    rng = random.Random(17)
    checked = 0
    while checked < 40:
        alphabet = ('x', 'y')[:rng.randint(1, 2)]
        sys = random_system(rng, TimeMonoid.word(alphabet), max_states=3, atoms=('acc',))
        dfa = regex_to_dfa(random_regex(rng, alphabet), alphabet)
        if len(dfa.states) > 3:
            continue
        checked += 1
        accept = sys.labels['acc']
        exact = eat_states(sys, dfa, accept, frozenset(sys.states) - accept)
        words = list(sys.time.elements(len(sys.states) * len(dfa.states)))
        for s in sys.states:
            expected = all(dfa.accepts(w) == (apply(sys, s, w) in accept) for w in words)
            assert (s in exact) == expected
