from __future__ import annotations

import contextlib
import enum
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterator, Self, cast

import click

from chronomatch.data.edgelist import (
    Delimiter,
    EdgeListFormat,
    EdgeListParseError,
    load_dataset,
)
from chronomatch.graph.temporal import GraphConstructionError, TemporalGraph
from chronomatch.match.engine import UnknownRole
from chronomatch.motifs.builtin import builtin_motif
from chronomatch.motifs.motif import (
    Motif,
    MotifParseError,
    parse_motif,
    validate_motif,
)
from chronomatch.utils.durations import parse_duration
from chronomatch.utils.types import Duration

if TYPE_CHECKING:
    from chronomatch.cli.app import CmApp

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"
DOMAIN_ERRORS = (
    GraphConstructionError,
    EdgeListParseError,
    MotifParseError,
    UnknownRole,
    UnicodeDecodeError,
    OSError,
)


class FileFormat(enum.StrEnum):
    snap = "snap"
    """whitespace separated, SNAP and KONECT files"""
    csv = "csv"
    """comma separated"""


class InputError(click.ClickException):
    """Bad input files or arguments, the command exits with code 2"""

    exit_code = 2


class DurationType(click.ParamType):
    name = "duration"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> Duration:
        try:
            return parse_duration(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


class CmContext(click.Context):

    @classmethod
    def current(cls) -> Self:
        return cast(Self, click.get_current_context())

    @property
    def app(self) -> CmApp:
        return self.find_root().obj  # type: ignore

    def load_graph(self, path: Path, file_format: str | None = None) -> TemporalGraph:
        with input_errors():
            graph = load_dataset(path, edge_list_format(file_format))
        return graph

    def load_motif(self, spec: str) -> Motif:
        with input_errors():
            motif = resolve_motif(spec)
        for warning in validate_motif(motif):
            logger.warning("motif %s: %s", spec, warning)
        return motif


class CmCommand(click.Command):
    context_class = CmContext


class CmGroup(click.Group):
    context_class = CmContext
    command_class = CmCommand


@contextlib.contextmanager
def input_errors() -> Iterator[None]:
    """Turn domain and IO errors into an :class:`InputError`"""
    try:
        yield
    except DOMAIN_ERRORS as e:
        raise InputError(str(e)) from e


def edge_list_format(file_format: str | None) -> EdgeListFormat | None:
    match file_format:
        case FileFormat.snap:
            return EdgeListFormat(delimiter=Delimiter.whitespace)
        case FileFormat.csv:
            return EdgeListFormat(delimiter=Delimiter.comma)
        case _:
            return None


def resolve_motif(spec: str) -> Motif:
    """A motif from ``builtin:NAME`` or from the path of a motif file

    A bare name which is not an existing file is looked up among the builtins.
    """
    if spec.lower().startswith(BUILTIN_PREFIX):
        return builtin_motif(spec[len(BUILTIN_PREFIX) :])
    path = Path(spec)
    if not path.exists():
        return builtin_motif(spec)
    return parse_motif(path.read_text(encoding="utf-8"))


def split_list(value: str) -> list[str]:
    """Split a comma separated option value"""
    return [item.strip() for item in value.split(",") if item.strip()]


class options:
    graph = click.option(
        "-g",
        "--graph",
        "graph_path",
        type=click.Path(path_type=Path, dir_okay=False),
        required=True,
        help="Temporal edge list file",
    )
    file_format = click.option(
        "--format",
        "file_format",
        type=click.Choice(tuple(f.value for f in FileFormat)),
        default=None,
        help="Edge list format, detected from the first data line if not provided",
    )
    motif = click.option(
        "-m",
        "--motif",
        required=True,
        help="Motif file path or builtin:NAME (M1..M6, cert, cycle3, path2, ...)",
    )
    delta = click.option(
        "-d",
        "--delta",
        type=DurationType(),
        default="inf",
        show_default=True,
        help="Window length: seconds, a suffixed value such as 1h, 1d, 1w or inf",
    )
    limit = click.option(
        "-l",
        "--limit",
        type=click.IntRange(min=1),
        default=None,
        help="Stop after this many matches",
    )
    attributes = click.option(
        "-a",
        "--attributes",
        is_flag=True,
        help="Match node and edge integer labels",
    )
    out = click.option(
        "-o",
        "--out",
        type=click.Path(path_type=Path, dir_okay=False, writable=True),
        default=None,
        help="Output CSV file, standard output if not provided",
    )
