import json

import pytest
from click.testing import CliRunner

from conftest import FRM_BAD_DOC, SYS_ABS_DOC, SYS_CYC2_DOC
from src.cli import cli, run_command

FRM_CHAIN_DOC = "worlds a b\nedge a a\nedge a b\nedge b b\n"
FRM_CLIQUE2_DOC = "worlds a b\nedge a a\nedge a b\nedge b a\nedge b b\n"
UNLABELED_DOC = "time nat\nstates s0 s1\nstep 1: s0->s1 s1->s0\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def test_check_valid_formula(runner, write):
    result = runner.invoke(cli, ['check', write('abs.dyn', SYS_ABS_DOC), 'p -> G p'])
    assert result.exit_code == 0
    assert 'satisfied at: a b' in result.output


def test_check_json_report(runner, write):
    result = runner.invoke(cli, ['check', write('abs.dyn', SYS_ABS_DOC), 'p -> G p', '--json'])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report['formula'] == 'p -> G p'
    assert report['satisfying'] == ['a', 'b'] and report['failing'] == []
    assert report['holds'] is True


def test_check_failing_formula(runner, write):
    path = write('cyc2.dyn', SYS_CYC2_DOC)
    result = runner.invoke(cli, ['check', path, 'G p'])
    assert result.exit_code == 1
    assert 'fails at:     s0 s1' in result.output
    assert runner.invoke(cli, ['check', path, 'p', '--state', 's0']).exit_code == 0
    assert runner.invoke(cli, ['check', path, 'p', '--state', 's1']).exit_code == 1


def test_bad_input_exits_2(runner, write):
    path = write('cyc2.dyn', SYS_CYC2_DOC)
    assert runner.invoke(cli, ['check', path, 'p &']).exit_code == 2
    assert runner.invoke(cli, ['check', path, 'q']).exit_code == 2
    assert runner.invoke(cli, ['check', path, 'eat(/x/; p; p)']).exit_code == 2
    assert runner.invoke(cli, ['check', write('bad.dyn', 'time nat\nstates a\nstep 1: a->b\n'), 'p']).exit_code == 2
    assert runner.invoke(cli, ['check', 'missing.dyn', 'p']).exit_code == 2


def test_linear_synthesis_gap_exits_3(runner, write):
    result = runner.invoke(cli, ['synthesize', '--mode', 'linear', write('bad.kf', FRM_BAD_DOC)])
    assert result.exit_code == 3
    assert '{a, b}' in result.output


def test_axioms_counter_valuation(runner, write):
    result = runner.invoke(cli, ['axioms', write('chain.kf', FRM_CHAIN_DOC), '--scheme', '5'])
    assert result.exit_code == 1
    assert '5: fails at a under A={a}' in result.output
    assert runner.invoke(cli, ['axioms', write('clique.kf', FRM_CLIQUE2_DOC)]).exit_code == 0


def test_synthesize_invertible(runner, write):
    result = runner.invoke(cli, ['synthesize', '--mode', 'invertible', write('clique.kf', FRM_CLIQUE2_DOC)])
    assert result.exit_code == 0
    assert result.output == "time int\nstates a b\nstep 1: a->b b->a\n"


def test_synthesize_json_and_precondition(runner, write):
    result = runner.invoke(cli, ['synthesize', write('chain.kf', FRM_CHAIN_DOC), '--json'])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report['mode'] == 'general'
    assert report['document'].startswith('time free 2\n')
    assert runner.invoke(cli, ['synthesize', '--mode', 'invertible', write('c.kf', FRM_CHAIN_DOC)]).exit_code == 3


def test_roundtrip(runner, write):
    result = runner.invoke(cli, ['roundtrip', '--mode', 'linear', write('chain.kf', FRM_CHAIN_DOC)])
    assert result.exit_code == 0
    assert 'linear: verified' in result.output


def test_classify_json(runner, write):
    result = runner.invoke(cli, ['classify', write('bad.kf', FRM_BAD_DOC), '--json'])
    assert result.exit_code == 0
    profile = json.loads(result.output)
    assert profile['symmetric'] == {'holds': False, 'counterexample': ['a', 'c']}
    assert profile['transient_scc_singleton']['counterexample'] == ['a', 'b']
    assert profile['preorder']['holds'] is True


def test_bisim_views(runner, write):
    path = write('cyc2.dyn', SYS_CYC2_DOC)
    result = runner.invoke(cli, ['bisim', path, '--view', 'step'])
    assert result.exit_code == 0
    assert result.output == '{s0}\n{s1}\n'
    result = runner.invoke(cli, ['bisim', write('u.dyn', UNLABELED_DOC), '--view', 'trajectory', '--json'])
    assert json.loads(result.output)['blocks'] == [['s0', 's1']]


def test_distinguish(runner, write):
    result = runner.invoke(cli, ['distinguish', write('abs.dyn', SYS_ABS_DOC), 'b', 'a'])
    assert result.exit_code == 0
    assert result.output.strip() == 'p'
    result = runner.invoke(cli, ['distinguish', write('u.dyn', UNLABELED_DOC), 's0', 's1', '--view', 'step'])
    assert result.exit_code == 1


def test_orbit_and_verify(runner, write):
    path = write('abs.dyn', SYS_ABS_DOC)
    result = runner.invoke(cli, ['orbit', path, 'a'])
    assert result.exit_code == 0
    assert result.output == 'orbit: a b\nlasso: a (b)^w\n'
    result = runner.invoke(cli, ['verify', path, '--bound', '3'])
    assert result.exit_code == 0
    assert '0 violations' in result.output


def test_run_command_returns_exit_code(write):
    assert run_command(['axioms', write('chain.kf', FRM_CHAIN_DOC), '--scheme', 'T']) == 0
    assert run_command(['axioms', write('chain.kf', FRM_CHAIN_DOC), '--scheme', '5']) == 1


def test_non_positive_bound_and_duplicate_symbols_exit_2(runner, write):
    path = write('abs.dyn', SYS_ABS_DOC)
    assert runner.invoke(cli, ['verify', path, '--bound', '0']).exit_code == 2
    doubled = write('xx.dyn', "time word x x\nstates a\nstep x: a->a\n")
    assert runner.invoke(cli, ['check', doubled, 'true']).exit_code == 2


def test_errors_are_reported_on_stdout(write):
    runner = CliRunner(mix_stderr=False)
    path = write('bad.kf', FRM_BAD_DOC)
    result = runner.invoke(cli, ['synthesize', '--mode', 'linear', path, '--json'])
    assert result.exit_code == 3
    report = json.loads(result.stdout)
    assert report['error'] == 'ConstructionGapError'
    assert report['witness'] == ['a', 'b']
    result = runner.invoke(cli, ['synthesize', '--mode', 'linear', path])
    assert result.exit_code == 3
    assert result.stdout.startswith('Error: ')


def test_syntax_error_report_carries_position(write):
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(cli, ['check', write('cyc2.dyn', SYS_CYC2_DOC), 'p &', '--json'])
    assert result.exit_code == 2
    report = json.loads(result.stdout)
    assert report['error'] == 'FormulaSyntaxError'
    assert report['position'] == 3
