"""
Posetkit - Derive Command

Builds Cl(P), D(P) or Conv★(P) and writes it as a poset file, a JSON or
YAML document, and optionally a DOT diagram.
"""

import logging
from typing import Any, Dict

import click

from api.commands.common import CliContext, load_source, pass_context
from api.validators.report_schema import DerivedDumpSchema, dumps, to_plain
from core.dot_emitter import write_dot
from core.operations import DERIVATIONS, Derived, derive
from core.poset_file import dump_yaml, poset_document, serialize_poset

logger = logging.getLogger('posetkit.api.derive')

TITLES = {'cl': 'closed subsets', 'dm': 'normal cuts', 'conv': 'non-empty convex subsets'}


def derived_document(derived: Derived, source: str) -> Dict[str, Any]:
    document = dict(poset_document(derived.poset, name=f"{derived.kind}({source})"))
    document.update(kind=derived.kind, source=source, size=derived.poset.size,
                    orthocomplement=derived.orthocomplement, embedding=derived.embedding,
                    verification=derived.verification)
    return DerivedDumpSchema().dump(document)


@click.command('derive')
@click.argument('source')
@click.argument('what', type=click.Choice(DERIVATIONS))
@click.option('--dot', 'dot_path', type=click.Path(dir_okay=False), default=None,
              help='Also write the Hasse diagram to this DOT file.')
@click.option('--json', 'as_json', is_flag=True, help='Same as --format json.')
@click.option('--format', 'fmt', type=click.Choice(['poset', 'json', 'yaml']), default='poset',
              show_default=True)
@pass_context
def derive_command(ctx: CliContext, source, what, dot_path, as_json, fmt):
    """Derive WHAT (cl, dm or conv) from the poset in SOURCE."""
    p = load_source(ctx, source, bounded=what != 'dm')
    derived = derive(p, what, ctx.config.CONV_STAR_CAP)
    if not derived.verification.holds:
        logger.warning(f"{what} of {source} failed its own axioms: {derived.verification.witness}")

    fmt = 'json' if as_json else fmt
    if fmt == 'json':
        click.echo(dumps(derived_document(derived, source)))
    elif fmt == 'yaml':
        click.echo(dump_yaml(to_plain(derived_document(derived, source))), nl=False)
    else:
        comment = f"{TITLES[what]} of {source}: {derived.poset.size} elements"
        click.echo(serialize_poset(derived.poset, comment=comment), nl=False)

    if dot_path:
        write_dot(derived.poset, dot_path, name=f"{what}_{derived.poset.size}")
