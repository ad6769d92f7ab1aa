"""
Posetkit - Command Helpers

State shared by all commands and the lookup of poset arguments, which may
be a file path or the name of a bundled fixture.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import click

from config.settings import Config
from core.errors import ManifestError, PosetkitError
from core.fixtures import FixtureCorpus
from core.poset import BoundedPoset, Poset, as_bounded
from core.poset_file import load_poset

logger = logging.getLogger('posetkit.api.common')


@dataclass
class CliContext:
    """Configuration and fixture corpus handed to every command."""

    config: type = Config
    corpus: FixtureCorpus = field(default=None)

    def __post_init__(self):
        if self.corpus is None:
            self.corpus = FixtureCorpus(self.config)


pass_context = click.make_pass_decorator(CliContext, ensure=True)


def load_source(ctx: CliContext, source: str, bounded: bool = True) -> Union[BoundedPoset, Poset]:
    """
    A poset from a file path, or from a fixture name when no such file exists.

    Args:
        ctx: command context
        source: file path or fixture name
        bounded: require a least and a greatest element

    Raises:
        PosetkitError: if source is neither a readable file nor a fixture
        NoBottom, NoTop: if bounded and the poset lacks a bound
    """
    path = Path(source)
    if path.exists():
        logger.debug(f"Loading poset file {path}")
        poset = load_poset(path)
        return as_bounded(poset) if bounded else poset
    try:
        return ctx.corpus.bounded(source) if bounded else ctx.corpus.load(source)
    except ManifestError:
        raise PosetkitError(f"No poset file or fixture named '{source}'")


def echo_lines(lines):
    for line in lines:
        click.echo(line)
