"""Command-line front end. Every subcommand prints either human text or, with
``--json``, one OutputEnvelope on stdout."""
import functools
import sys
from typing import Callable, Optional, Sequence

import click

from ..core.errors import CapaxError, ParseError, ResourceLimitError, UnsupportedError
from ..models.envelope_models import ErrorInfo, OutputEnvelope
from ..tools.capacity_tools import (capacity_getter, dominated_getter, homology_getter, homotopy_getter,
                                    normal_form_getter, pp_form_getter)
from ..tools.group_tools import group_getter, idempotents_getter, summands_getter
from ..tools.verify_tools import verify_getter

EXIT_OK, EXIT_ERROR, EXIT_UNSUPPORTED, EXIT_RESOURCE = 0, 1, 2, 3


def exit_code_for(error: CapaxError) -> int:
    if isinstance(error, UnsupportedError):
        return EXIT_UNSUPPORTED
    if isinstance(error, ResourceLimitError):
        return EXIT_RESOURCE
    return EXIT_ERROR


def _emit(ctx: click.Context, command: str, input_text: str, produce: Callable[[], dict],
          render: Callable[[dict], str]) -> dict:
    """Runs one command and prints its result, or prints the error and exits."""
    as_json = ctx.obj['json']
    try:
        result = produce()
    except CapaxError as e:
        if as_json:
            info = ErrorInfo(code=e.code, message=e.message,
                             offset=e.offset if isinstance(e, ParseError) else None)
            envelope = OutputEnvelope(command=command, input=input_text, status='error', error=info)
            click.echo(envelope.model_dump_json())
        else:
            click.echo(f'error [{e.code}]: {e}', err=True)
        ctx.exit(exit_code_for(e))
    if as_json:
        click.echo(OutputEnvelope(command=command, input=input_text, status='ok', result=result).model_dump_json())
    else:
        click.echo(render(result))
    return result


def _table(payload: dict) -> str:
    return '\n'.join(f'  {degree}: {group}' for degree, group in payload['groups'].items())


JSON_HELP = 'Print a JSON envelope instead of text.'
ORACLE_CAP_HELP = 'Largest group order the brute-force oracle accepts.'


@click.group()
@click.option('--json', 'as_json', is_flag=True, help=JSON_HELP)
@click.option('--oracle-cap', type=click.IntRange(min=1), default=None, envvar='CAPAX_ORACLE_CAP',
              help=ORACLE_CAP_HELP)
@click.pass_context
def cli(ctx: click.Context, as_json: bool, oracle_cap: Optional[int]):
    """Exact capacity of Moore spaces, Eilenberg-MacLane spaces and their wedges and products."""
    ctx.ensure_object(dict)
    ctx.obj['json'] = as_json
    ctx.obj['oracle_cap'] = oracle_cap


def global_options(f):
    """Accepts --json and --oracle-cap after the subcommand too; a value given
    there overrides the one given before it."""
    @click.option('--json', 'as_json', is_flag=True, help=JSON_HELP)
    @click.option('--oracle-cap', type=click.IntRange(min=1), default=None, help=ORACLE_CAP_HELP)
    @functools.wraps(f)
    def wrapper(*args, as_json: bool, oracle_cap: Optional[int], **kwargs):
        obj = click.get_current_context().ensure_object(dict)
        if as_json:
            obj['json'] = True
        if oracle_cap is not None:
            obj['oracle_cap'] = oracle_cap
        return f(*args, **kwargs)

    return wrapper


@cli.command()
@click.argument('expression')
@click.option('--require-finite', is_flag=True, help='Exit with code 2 unless the capacity is finite.')
@global_options
@click.pass_context
def capacity(ctx: click.Context, expression: str, require_finite: bool):
    """Capacity of a space expression."""
    def render(r):
        text = f'capacity: {r["capacity"]}' if r['kind'] != 'unknown' else f'capacity: unknown ({r["reason"]})'
        return f'{text}\n  {r["detail"]}' if r['detail'] else text

    result = _emit(ctx, 'capacity', expression, lambda: capacity_getter(expression), render)
    if require_finite and result['kind'] != 'finite':
        ctx.exit(EXIT_UNSUPPORTED)


@cli.command()
@click.argument('expression')
@global_options
@click.pass_context
def dominated(ctx: click.Context, expression: str):
    """Homotopy types dominated by a space of finite capacity."""
    _emit(ctx, 'dominated', expression, lambda: dominated_getter(expression),
          lambda r: '\n'.join([f'{r["count"]} dominated types:'] + [f'  {t}' for t in r['types']]))


@cli.command()
@click.argument('expression')
@global_options
@click.pass_context
def normalize(ctx: click.Context, expression: str):
    """Normal form of a space expression."""
    def render(r):
        lines = [f'kind: {r["kind"]}' + (' (wedge of circles)' if r['circle_wedge'] else '')]
        lines += [f'  {degree}: {group}' for degree, group in r['degrees'].items()]
        if r['reason']:
            lines.append(f'reason: {r["reason"]}')
        return '\n'.join(lines)

    _emit(ctx, 'normalize', expression, lambda: normal_form_getter(expression), render)


@cli.command()
@click.argument('literal')
@click.option('--oracle', is_flag=True, help='Cross-check with the brute-force oracle.')
@global_options
@click.pass_context
def summands(ctx: click.Context, literal: str, oracle: bool):
    """Direct summands of a group up to isomorphism."""
    def render(r):
        lines = [f'{r["group"]}: {r["count"]} summands']
        if r['classes'] is not None:
            lines.append('  ' + ', '.join(r['classes']))
        if oracle:
            lines.append(f'oracle: {r["oracle_count"]} summands')
        return '\n'.join(lines)

    _emit(ctx, 'summands', literal, lambda: summands_getter(literal, oracle=oracle, cap=ctx.obj['oracle_cap']),
          render)


@cli.command()
@click.argument('expression')
@click.option('--max-degree', type=click.IntRange(min=1), default=5, show_default=True)
@global_options
@click.pass_context
def homology(ctx: click.Context, expression: str, max_degree: int):
    """Reduced integral homology table."""
    _emit(ctx, 'homology', expression, lambda: homology_getter(expression, max_degree),
          lambda r: 'reduced homology:\n' + _table(r))


@cli.command()
@click.argument('expression')
@click.option('--max-degree', type=click.IntRange(min=1), default=5, show_default=True)
@global_options
@click.pass_context
def homotopy(ctx: click.Context, expression: str, max_degree: int):
    """Homotopy groups of a product of Eilenberg-MacLane spaces."""
    _emit(ctx, 'homotopy', expression, lambda: homotopy_getter(expression, max_degree),
          lambda r: 'homotopy groups:\n' + _table(r))


@cli.command('pp-form')
@click.argument('expression')
@global_options
@click.pass_context
def pp_form(ctx: click.Context, expression: str):
    """A Moore atom as a suspended wedge of pseudo-projective planes."""
    _emit(ctx, 'pp-form', expression, lambda: pp_form_getter(expression), lambda r: r['form'])


@cli.command()
@click.argument('literal')
@global_options
@click.pass_context
def idempotents(ctx: click.Context, literal: str):
    """Idempotent endomorphisms against the capacity of K(G, 1)."""
    def render(r):
        lines = [f'{r["group"]}: {r["count"]} idempotents', f'capacity of K(G, 1): {r["em_capacity"]}']
        if r['bound_holds'] is not None:
            lines.append(f'bound holds: {"yes" if r["bound_holds"] else "no"}')
        if r['witness']:
            w = r['witness']
            lines.append(f'witness family {w["pattern"]} in rank {w["rank"]}, '
                         f'{"verified" if w["verified"] else "NOT verified"}')
        return '\n'.join(lines)

    _emit(ctx, 'idempotents', literal, lambda: idempotents_getter(literal, cap=ctx.obj['oracle_cap']), render)


@cli.command()
@click.argument('literal', required=False)
@click.option('--presentation', help='Relation presentation as JSON: {"generators": g, "relations": [[...]]}.')
@global_options
@click.pass_context
def group(ctx: click.Context, literal: Optional[str], presentation: Optional[str]):
    """Canonical form of a group literal or presentation."""
    if (literal is None) == (presentation is None):
        raise click.UsageError('give exactly one of LITERAL or --presentation')

    def render(r):
        return '\n'.join([
            r['group'],
            f'  invariant factors: {r["invariant_factors"]}',
            f'  elementary divisors: {r["elementary_divisors"]}',
        ] + ([f'  order: {r["order"]}'] if r['order'] is not None else []))

    _emit(ctx, 'group', presentation if presentation is not None else literal,
          lambda: group_getter(literal=literal, presentation=presentation), render)


@cli.command()
@click.option('--max-order', type=click.IntRange(min=1), required=True)
@click.option('--show-classes', is_flag=True, help='List the summand classes the oracle found.')
@global_options
@click.pass_context
def verify(ctx: click.Context, max_order: int, show_classes: bool):
    """Compare the summand formula with the oracle for every group of order <= N."""
    def render(r):
        lines = []
        for row in r['groups']:
            line = f'{"PASS" if row["pass"] else "FAIL"}  {row["group"]}  formula={row["formula"]} oracle={row["oracle"]}'
            if show_classes:
                line += '  [' + ', '.join(row['classes']) + ']'
            lines.append(line)
        lines.append(f'checked {r["checked"]} groups: {r["passed"]} passed, {r["failed"]} failed')
        return '\n'.join(lines)

    result = _emit(ctx, 'verify', f'--max-order {max_order}',
                   lambda: verify_getter(max_order, cap=ctx.obj['oracle_cap'], show_classes=show_classes), render)
    if not result['all_pass']:
        ctx.exit(EXIT_ERROR)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs the CLI on argv and returns the exit code instead of exiting."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name='capax', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo('aborted', err=True)
        return EXIT_ERROR
    return rv if isinstance(rv, int) else EXIT_OK


def main():
    sys.exit(run())
