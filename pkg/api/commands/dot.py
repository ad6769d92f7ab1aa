"""
Posetkit - DOT Command
"""

import click

from api.commands.common import CliContext, load_source, pass_context
from core.dot_emitter import to_dot, write_dot


@click.command('dot')
@click.argument('source')
@click.argument('out', type=click.Path(dir_okay=False, allow_dash=True))
@pass_context
def dot_command(ctx: CliContext, source, out):
    """Write the Hasse diagram of SOURCE to OUT ('-' for stdout)."""
    p = load_source(ctx, source, bounded=False)
    if out == '-':
        click.echo(to_dot(p), nl=False)
    else:
        write_dot(p, out)
