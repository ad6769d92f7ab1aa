"""
Posetkit - Fixtures Command

Lists the bundled fixture posets and checks the facts recorded for them
in the manifest.
"""

import logging

import click

from api.commands.common import CliContext, pass_context

logger = logging.getLogger('posetkit.api.fixtures')


@click.command('fixtures')
@click.argument('names', nargs=-1)
@click.option('--check', 'run_checks', is_flag=True, help='Verify every recorded fact.')
@pass_context
def fixtures_command(ctx: CliContext, names, run_checks):
    """List fixtures, or with --check verify their facts (exit 1 on any mismatch)."""
    corpus = ctx.corpus
    selected = list(names) or corpus.names()

    if not run_checks:
        for name in selected:
            entry = corpus.entry(name)
            click.echo(f"{name}\t{corpus.load(name).size}\t{entry['file']}\t{entry['description']}")
        return

    failures = 0
    for name in selected:
        for outcome in corpus.check_fixture(name):
            status = 'ok' if outcome.passed else 'FAIL'
            line = f"{status}\t{name}\t{outcome.kind}\t{outcome.claim}"
            if not outcome.passed:
                failures += 1
                line += f"\tobserved {outcome.observed}"
            click.echo(line)
    click.echo(f"{failures} failed", err=failures > 0)
    if failures:
        click.get_current_context().exit(1)
