"""Command-line entry points.

Exit codes: 0 success or the property holds, 1 the property fails, 2 bad
input (usage, syntax, invalid system, time mismatch, unknown atom), 3 a
construction precondition fails.
"""

import functools
import json
import logging
from typing import Any, Dict, Optional, Sequence

import click
from pydantic import ValidationError

from src.checker import holds_at, sat_result
from src.coalgebra import (
    MultiStep,
    Orbit,
    Step,
    bisimilarity,
    build_view,
    distinguishing_formula,
    trajectory_bisimilarity,
)
from src.config import ACTION_BOUND, LOG_LEVEL, configure_logging
from src.documents import format_formula, parse_formula, parse_frame, parse_system, print_system
from src.errors import (
    BisimilarStatesError,
    ConstructionGapError,
    DynLogicError,
    PreconditionViolatedError,
)
from src.synthesis import (
    AxiomScheme,
    axiom_profile,
    axiom_validity,
    classify_frame,
    synthesize_general,
    synthesize_invertible,
    synthesize_linear,
    verify_synthesis,
)
from src.timecore import orbit as orbit_of
from src.timecore import trajectory_lasso, validate_action

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILS, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

SYNTHESIZERS = {
    'general': synthesize_general,
    'linear': synthesize_linear,
    'invertible': synthesize_invertible,
}

json_option = click.option('--json', 'as_json', is_flag=True, help='Machine-readable report on stdout.')
file_argument = functools.partial(click.argument, type=click.Path(exists=True, dir_okay=False))


def _read(path: str) -> str:
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def emit(report: Dict[str, Any], text: str, as_json: bool) -> None:
    click.echo(json.dumps(report, indent=2) if as_json else text)


def _error_report(e: Exception) -> Dict[str, Any]:
    report: Dict[str, Any] = {'error': type(e).__name__, 'message': str(e)}
    for name in ('witness', 'counterexample', 'position', 'line'):
        value = getattr(e, name, None)
        if value is not None:
            report[name] = list(value) if isinstance(value, tuple) else value
    return report


def _fail(e: Exception, code: int, as_json: bool) -> None:
    ctx = click.get_current_context()
    logger.error(f"{ctx.command.name}: {e}")
    emit(_error_report(e), f"Error: {e}", as_json)
    ctx.exit(code)


def exit_codes(command):
    """Map library exceptions onto the documented exit codes, reporting on stdout."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        as_json = kwargs.get('as_json', False)
        try:
            return command(*args, **kwargs)
        except (PreconditionViolatedError, ConstructionGapError) as e:
            _fail(e, EXIT_PRECONDITION, as_json)
        except (DynLogicError, ValidationError) as e:
            _fail(e, EXIT_INPUT, as_json)
    return wrapper


@click.group()
@click.option('--log-level', default=LOG_LEVEL, show_default=True,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              help='Logging threshold for stderr diagnostics.')
def cli(log_level: str):
    """Model checking and frame synthesis for finite dynamical systems."""
    configure_logging(log_level)


@cli.command()
@file_argument('system')
@click.argument('formula')
@click.option('--state', default=None, help='Decide the formula at one state only.')
@json_option
@click.pass_context
@exit_codes
def check(ctx, system: str, formula: str, state: Optional[str], as_json: bool):
    """Evaluate FORMULA on SYSTEM; succeeds when it holds everywhere (or at --state)."""
    sys = parse_system(_read(system))
    f = parse_formula(formula)
    result = sat_result(sys, f)
    satisfying = result.ordered()
    holds = holds_at(sys, f, state) if state else result.valid
    summary = result.get_summary()
    failing = summary['failing']
    report = {'formula': format_formula(f), **summary, 'holds': holds}
    if state:
        report['state'] = state
    text = f"{format_formula(f)}\n  satisfied at: {' '.join(satisfying) or '(none)'}"
    if failing:
        text += f"\n  fails at:     {' '.join(failing)}"
    emit(report, text, as_json)
    ctx.exit(EXIT_OK if holds else EXIT_FAILS)


def _view_kind(sys, view: str, t: Optional[str], times: Sequence[str]):
    if view == 'step':
        return Step(t)
    if view == 'multi':
        return MultiStep(tuple(times) if times else None)
    return Orbit()


VIEW_CHOICE = click.Choice(['step', 'multi', 'orbit', 'trajectory'])


@cli.command()
@file_argument('system')
@click.option('--view', type=VIEW_CHOICE, default='orbit', show_default=True)
@click.option('--t', 't', default=None, help='Duration of the step view.')
@click.option('--times', multiple=True, help='Times of the multi-step view (default: generators).')
@json_option
@exit_codes
def bisim(system: str, view: str, t: Optional[str], times: Sequence[str], as_json: bool):
    """Print the bisimilarity classes of SYSTEM under a view."""
    sys = parse_system(_read(system))
    if view == 'trajectory':
        partition = trajectory_bisimilarity(sys)
    else:
        partition = bisimilarity(build_view(sys, _view_kind(sys, view, t, times)))
    report = {'view': view, 'blocks': [list(b) for b in partition.blocks], 'rounds': partition.rounds}
    text = '\n'.join('{' + ', '.join(block) + '}' for block in partition.blocks)
    emit(report, text, as_json)


@cli.command()
@file_argument('system')
@click.argument('first')
@click.argument('second')
@click.option('--view', type=click.Choice(['step', 'multi', 'orbit']), default='orbit', show_default=True)
@click.option('--t', 't', default=None, help='Duration of the step view.')
@click.option('--times', multiple=True, help='Times of the multi-step view (default: generators).')
@json_option
@click.pass_context
@exit_codes
def distinguish(ctx, system: str, first: str, second: str, view: str, t: Optional[str],
                times: Sequence[str], as_json: bool):
    """A formula true at FIRST and false at SECOND; exit 1 when they are bisimilar."""
    sys = parse_system(_read(system))
    try:
        f = distinguishing_formula(build_view(sys, _view_kind(sys, view, t, times)), first, second)
    except BisimilarStatesError as e:
        emit({'view': view, 'states': [first, second], 'formula': None}, str(e), as_json)
        ctx.exit(EXIT_FAILS)
    confirmed = holds_at(sys, f, first) and not holds_at(sys, f, second)
    emit({'view': view, 'states': [first, second], 'formula': format_formula(f), 'confirmed': confirmed},
         format_formula(f), as_json)


@cli.command()
@file_argument('system')
@click.argument('state')
@json_option
@exit_codes
def orbit(system: str, state: str, as_json: bool):
    """States reachable from STATE; nat/int systems also show the trajectory lasso."""
    sys = parse_system(_read(system))
    reached = sys.ordered(orbit_of(sys, state))
    report: Dict[str, Any] = {'state': state, 'orbit': reached}
    text = f"orbit: {' '.join(reached)}"
    if sys.time.is_numeric:
        lasso = trajectory_lasso(sys, state)
        report['lasso'] = {'prefix': list(lasso.prefix), 'cycle': list(lasso.cycle)}
        text += f"\nlasso: {' '.join(lasso.prefix)} ({' '.join(lasso.cycle)})^w"
    emit(report, text, as_json)


@cli.command()
@file_argument('system')
@click.option('--bound', default=ACTION_BOUND, show_default=True, type=click.IntRange(min=1))
@json_option
@click.pass_context
@exit_codes
def verify(ctx, system: str, bound: int, as_json: bool):
    """Check the monoid-action laws on all time values up to --bound generators."""
    report = validate_action(parse_system(_read(system)), bound)
    lines = [f"{report.checked_pairs} checks, {len(report.violations)} violations"]
    lines.extend(
        f"  {v.law} at {v.state}: expected {v.expected}, got {v.actual}" for v in report.violations
    )
    emit(report.model_dump(mode='json'), '\n'.join(lines), as_json)
    ctx.exit(EXIT_OK if report.ok else EXIT_FAILS)


MODE_OPTION = click.option('--mode', type=click.Choice(list(SYNTHESIZERS)), default='general', show_default=True)


@cli.command()
@file_argument('frame')
@MODE_OPTION
@json_option
@exit_codes
def synthesize(frame: str, mode: str, as_json: bool):
    """Print a system whose reachability relation is FRAME's relation."""
    sys = SYNTHESIZERS[mode](parse_frame(_read(frame)))
    document = print_system(sys)
    emit({'mode': mode, 'time': sys.time.describe(), 'document': document}, document.rstrip('\n'), as_json)


@cli.command()
@file_argument('frame')
@json_option
@exit_codes
def classify(frame: str, as_json: bool):
    """Order-theoretic profile of FRAME, with the first counterexample to each failing flag."""
    profile = classify_frame(parse_frame(_read(frame)))
    lines = []
    for name, check_ in profile:
        mark = 'yes' if check_.holds else f"no ({', '.join(check_.counterexample)})"
        lines.append(f"{name}: {mark}")
    emit(profile.model_dump(mode='json'), '\n'.join(lines), as_json)


@cli.command()
@file_argument('frame')
@click.option('--scheme', type=click.Choice([s.value for s in AxiomScheme]), default=None,
              help='One scheme; all four when omitted.')
@json_option
@click.pass_context
@exit_codes
def axioms(ctx, frame: str, scheme: Optional[str], as_json: bool):
    """Frame validity of T, 4, .3 and 5; exit 1 when a checked scheme fails."""
    fr = parse_frame(_read(frame))
    reports = [axiom_validity(fr, scheme)] if scheme else list(axiom_profile(fr).values())
    emit({'reports': [r.model_dump(mode='json') for r in reports]},
         '\n'.join(r.describe() for r in reports), as_json)
    ctx.exit(EXIT_OK if all(reports) else EXIT_FAILS)


@cli.command()
@file_argument('frame')
@MODE_OPTION
@json_option
@click.pass_context
@exit_codes
def roundtrip(ctx, frame: str, mode: str, as_json: bool):
    """Synthesize from FRAME and confirm the system's reachability reproduces it."""
    fr = parse_frame(_read(frame))
    ok = verify_synthesis(fr, SYNTHESIZERS[mode](fr))
    emit({'mode': mode, 'verified': ok}, f"{mode}: {'verified' if ok else 'MISMATCH'}", as_json)
    ctx.exit(EXIT_OK if ok else EXIT_FAILS)


def run_command(argv: Sequence[str]) -> int:
    """Run the CLI in-process and return its exit code."""
    try:
        cli.main(args=list(argv), prog_name='dynlogic')
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else 1)
    return EXIT_OK
