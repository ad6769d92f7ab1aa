"""
Posetkit - Command-Line Application

Sets up the click command group with all commands, logging and error
handling. Run as `python app.py <command>` or through the `posetkit`
wrapper script.
"""

import logging
import logging.config
import sys
from pathlib import Path
from typing import Callable, Dict, Type

import click

from api.commands import check, derive, dot, fixtures, operations, search
from api.commands.common import CliContext
from config.settings import get_config
from core.errors import PosetkitError

logger = logging.getLogger('posetkit.app')


class PosetkitGroup(click.Group):
    """Command group that routes registered exception types to handlers."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.error_handlers: Dict[Type[BaseException], Callable] = {}

    def errorhandler(self, exc_type: Type[BaseException]):
        def decorator(func):
            self.error_handlers[exc_type] = func
            return func
        return decorator

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except tuple(self.error_handlers) as error:
            for exc_type, handler in self.error_handlers.items():
                if isinstance(error, exc_type):
                    ctx.exit(handler(error))
            raise


def create_cli(config_name=None) -> PosetkitGroup:
    """
    Application factory that creates and configures the command group.

    Args:
        config_name (str): Configuration environment name

    Returns:
        PosetkitGroup: the `posetkit` command group
    """
    config_class = get_config(config_name)

    @click.group(cls=PosetkitGroup)
    @click.option('--verbose', '-v', is_flag=True, help='Log at DEBUG level to stderr.')
    @click.pass_context
    def cli(ctx, verbose):
        """Finite poset toolkit: complements, residuation, completions and searches."""
        setup_logging(config_class, verbose)
        ctx.obj = CliContext(config=config_class)

    register_commands(cli)
    register_error_handlers(cli)
    return cli


def setup_logging(config, verbose: bool = False):
    """
    Configure logging. Logs go to stderr so that stdout stays byte-stable.

    Args:
        config: configuration class
        verbose: force DEBUG level
    """
    log_config_path = Path(config.BASE_DIR) / 'config' / 'logging.conf'

    if log_config_path.exists():
        logging.config.fileConfig(log_config_path, disable_existing_loggers=False)
    else:
        logging.basicConfig(
            level=config.LOG_LEVEL,
            format=config.LOG_FORMAT,
            stream=sys.stderr,
        )
    if verbose:
        logging.getLogger('posetkit').setLevel(logging.DEBUG)

    logger.debug(f"Posetkit starting in {config.POSETKIT_ENV} mode")


def register_commands(cli: click.Group):
    """
    Register all commands with the group.

    Args:
        cli: the command group
    """
    cli.add_command(check.check_command)
    cli.add_command(check.properties_command)
    cli.add_command(operations.op_command)
    cli.add_command(derive.derive_command)
    cli.add_command(search.search_command)
    cli.add_command(dot.dot_command)
    cli.add_command(fixtures.fixtures_command)


def register_error_handlers(cli: PosetkitGroup):
    """
    Register error handlers for the group.

    Args:
        cli: the command group
    """

    @cli.errorhandler(PosetkitError)
    def handle_posetkit_error(error):
        """Domain errors print one line to stderr and exit 2."""
        logger.error(f"{type(error).__name__}: {error}")
        click.echo(f"error: {error}", err=True)
        return 2


cli = create_cli()


if __name__ == '__main__':
    cli()
