"""
Posetkit - Operation Command

Evaluates one named operation on a poset and prints the resulting set,
e.g. `posetkit op fig8.poset plus a` prints {c,d,g,h}.
"""

import logging

import click

from api.commands.common import CliContext, load_source, pass_context
from core.operations import OPERATION_NAMES, evaluate, format_result

logger = logging.getLogger('posetkit.api.operations')


@click.command('op')
@click.argument('source')
@click.argument('opname', type=click.Choice(OPERATION_NAMES))
@click.argument('args', nargs=-1, required=True)
@pass_context
def op_command(ctx: CliContext, source, opname, args):
    """
    Apply OPNAME to ARGS in the poset SOURCE.

    Binary operators (circ, imp, odot, hook) take two element names. plus
    takes an element or a set; U, L, min, max, hull, sup and inf take a set
    written as comma-separated names, e.g. "a,b" or "{a,b}".
    """
    bp = load_source(ctx, source)
    result = evaluate(bp, opname, list(args))
    click.echo(format_result(result))
