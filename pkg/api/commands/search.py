"""
Posetkit - Search Command

Runs a predicate search or a universal verification suite over all
bounded posets up to a size. A failing verification exits with status 1.
"""

import logging

import click
from marshmallow import ValidationError

from api.commands.common import CliContext, echo_lines, load_source, pass_context
from api.validators.report_schema import SearchResultSchema, dumps
from api.validators.search_schema import SearchSpecSchema
from core.errors import PosetkitError, PredicateUnknown
from core.poset import BoundedPoset
from core.search import MODES, SearchResult, run_search
from core.theorems import SUITE_NAMES

logger = logging.getLogger('posetkit.api.search')


def _describe(bp: BoundedPoset) -> str:
    base = bp.base
    covers = ' '.join(f"{base.names[lo]}<{base.names[hi]}" for lo, hi in base.cover_pairs())
    return f"elements: {' '.join(base.names)}; covers: {covers}"


def format_result(result: SearchResult):
    yield f"mode: {result.mode}"
    sizes = ', '.join(f"{n}: {count}" for n, count in sorted(result.per_size.items()))
    yield f"examined: {result.examined} ({sizes})"
    if result.passed is not None:
        yield f"passed: {'true' if result.passed else 'false'}"
    yield f"matches: {len(result.matches)}"
    for match in result.matches:
        yield f"  size {match.size} [{match.canonical}] {_describe(match.poset)}"
        for report in match.reports:
            witness = ', '.join(f"{k}={v}" for k, v in (report.witness or {}).items())
            yield f"    {report.property}: {'true' if report.holds else 'false'}" + \
                  (f"  at {witness}" if witness else '')
    for name, row in sorted(result.statistics.items()):
        counts = ', '.join(f"{k} {v}" for k, v in row.items())
        yield f"  {name}: {counts}"


@click.command('search')
@click.option('--max-n', 'max_size', type=int, required=True, help='Largest poset size enumerated.')
@click.option('--min-n', 'min_size', type=int, default=None, help='Smallest poset size enumerated.')
@click.option('--find', 'predicate', default=None,
              help='Conjunction of properties, e.g. "uniquely-complemented & !boolean".')
@click.option('--verify', 'suite', type=click.Choice(SUITE_NAMES), default=None,
              help='Verification suite run on every class.')
@click.option('--mode', type=click.Choice(MODES), default=None,
              help='Defaults to find-all, or verify-universal with --verify.')
@click.option('--seed', type=click.IntRange(min=0), default=None)
@click.option('--sample', type=click.IntRange(min=1), default=None,
              help='Random instances for checks above their exhaustive size.')
@click.option('--threads', type=click.IntRange(min=0), default=0,
              help='Worker processes, 0 uses POSETKIT_THREADS or one per CPU.')
@click.option('--include', 'includes', multiple=True,
              help='Extra poset file or fixture added to the search. Repeatable.')
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable output.')
@pass_context
def search_command(ctx: CliContext, max_size, min_size, predicate, suite, mode, seed, sample,
                   threads, includes, as_json):
    """Search the bounded posets up to --max-n elements."""
    request = {'max_size': max_size, 'predicate': predicate, 'suite': suite, 'mode': mode,
               'seed': ctx.config.DEFAULT_SEED if seed is None else seed,
               'sample': sample, 'threads': threads}
    if min_size is not None:
        request['min_size'] = min_size
    try:
        spec = SearchSpecSchema().load(request)
    except ValidationError as e:
        if 'predicate' in e.messages and predicate is not None:
            raise PredicateUnknown(f"Invalid predicate: {e.messages['predicate']}") from e
        raise PosetkitError(f"Invalid search request: {e.messages}") from e
    spec.include = [load_source(ctx, item) for item in includes]

    result = run_search(spec, ctx.config)
    logger.info(f"Search examined {result.examined} classes in {result.elapsed:.2f}s")

    if as_json:
        click.echo(dumps(SearchResultSchema().dump(result)))
    else:
        echo_lines(format_result(result))
    if result.passed is False:
        click.get_current_context().exit(1)
