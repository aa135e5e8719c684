import click

from chronomatch.cli import settings

from .base import CmContext, CmGroup
from .bench import bench
from .match import count, match, motifs, rank, stats


@click.group(cls=CmGroup)
@click.option(
    "--log-level",
    type=click.Choice(("DEBUG", "INFO", "WARNING", "ERROR"), case_sensitive=False),
    default=settings.DEFAULT_LOG_LEVEL,
    envvar=settings.LOG_LEVEL_ENV,
    show_default=True,
    help="Logging verbosity",
)
def chronomatch(log_level: str) -> None:
    """Temporal subgraph matching"""
    from chronomatch.cli.app import CmApp

    ctx = CmContext.current()
    app = ctx.ensure_object(CmApp)
    app.configure_logging(log_level)


chronomatch.add_command(match)
chronomatch.add_command(count)
chronomatch.add_command(rank)
chronomatch.add_command(stats)
chronomatch.add_command(motifs)
chronomatch.add_command(bench)
