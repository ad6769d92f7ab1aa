"""
Posetkit - Check Command

Decides named properties of a poset and prints one report per property.
Property falsity is a result, not an error: the exit status is 0 unless an
--expect claim does not match.
"""

import logging
from typing import Dict, List

import click

from api.commands.common import CliContext, echo_lines, load_source, pass_context
from api.validators.report_schema import CheckResultSchema, dumps
from core import registry
from core.poset import canonical_form
from core.report import PropertyReport
from core.theorems import CheckOptions

logger = logging.getLogger('posetkit.api.check')

_BOOLEANS = {'true': True, 'false': False, '1': True, '0': False, 'yes': True, 'no': False}


def parse_expectations(values) -> Dict[str, bool]:
    expected = {}
    for value in values:
        name, sep, raw = value.partition('=')
        if not sep or raw.strip().lower() not in _BOOLEANS:
            raise click.BadParameter(f"expected NAME=true|false, got '{value}'", param_hint='--expect')
        expected[name.strip()] = _BOOLEANS[raw.strip().lower()]
    return expected


def format_report(report: PropertyReport) -> str:
    line = f"{report.property}: {'true' if report.holds else 'false'}"
    notes = []
    if report.vacuous:
        notes.append('vacuous')
    if 'skipped' in report.details:
        notes.append(f"skipped: {report.details['skipped']}")
    elif not report.exhaustive:
        notes.append(f"sampled {report.samples}" if report.samples is not None else 'sampled')
    if notes:
        line += f" ({', '.join(notes)})"
    if report.witness:
        bound = ', '.join(f"{k}={_render(v)}" for k, v in report.witness.items())
        line += f"  at {bound}"
    return line


def _render(value) -> str:
    if isinstance(value, (list, tuple)):
        return '{' + ','.join(str(v) for v in value) + '}'
    return str(value)


@click.command('check')
@click.argument('source')
@click.option('--props', default='all', show_default=True,
              help="Comma-separated property names, or 'all'.")
@click.option('--expect', multiple=True, metavar='NAME=BOOL',
              help='Exit 1 unless the property has this truth value. Repeatable.')
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable output.')
@click.option('--sample', type=click.IntRange(min=1), default=None,
              help='Random instances for checks above their size caps.')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Sampling seed.')
@pass_context
def check_command(ctx: CliContext, source, props, expect, as_json, sample, seed):
    """Check properties of the poset in SOURCE (a file or fixture name)."""
    bp = load_source(ctx, source)
    expected = parse_expectations(expect)

    names: List[str] = [n.strip() for n in props.split(',') if n.strip()]
    names = registry.resolve(names)
    names += [n for n in registry.resolve(list(expected)) if n not in names]

    options = CheckOptions.from_config(ctx.config, sample=sample or ctx.config.DEFAULT_SAMPLE, seed=seed)
    logger.info(f"Checking {len(names)} properties of {source}")
    reports = registry.check_many(names, bp, options)

    if as_json:
        result = {'file': source, 'size': bp.size, 'canonical': canonical_form(bp).hex(), 'reports': reports}
        click.echo(dumps(CheckResultSchema().dump(result)))
    else:
        echo_lines(format_report(r) for r in reports)

    by_name = {r.property: r for r in reports}
    mismatches = [(n, want, by_name[n].holds) for n, want in expected.items() if by_name[n].holds != want]
    for name, want, got in mismatches:
        click.echo(f"expectation failed: {name} expected {str(want).lower()}, got {str(got).lower()}", err=True)
    if mismatches:
        click.get_current_context().exit(1)


@click.command('properties')
def properties_command():
    """List every registered property name."""
    echo_lines(registry.property_names())
