from __future__ import annotations

import enum
import io
import logging
from pathlib import Path
from typing import IO, Iterable, NamedTuple

from pydantic import BaseModel, Field

from chronomatch.graph.temporal import TemporalGraph, build_graph

logger = logging.getLogger(__name__)

CSV_HEADER = ("src", "dst", "time")


class EdgeListParseError(ValueError):
    """Raised when a line of an edge list cannot be parsed"""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class Delimiter(enum.StrEnum):
    whitespace = "whitespace"
    """Any run of spaces or tabs, SNAP and KONECT files"""
    comma = "comma"
    """Comma separated values"""


class EdgeRecord(NamedTuple):
    """A parsed edge with the line it came from"""

    src: str
    dst: str
    time: int
    line: int


class EdgeListFormat(BaseModel, frozen=True):
    """Layout of a temporal edge list file

    Three columns are read as ``src dst time``. With four or more columns the
    file follows the KONECT convention ``src dst weight time`` and the weight
    is ignored, unless :attr:`time_column` says otherwise.
    """

    delimiter: Delimiter = Field(default=Delimiter.whitespace)
    comment_prefixes: tuple[str, ...] = Field(default=("#", "%"))
    time_column: int | None = Field(
        default=None, ge=2, description="zero-based column of the timestamp"
    )

    def split(self, line: str) -> list[str]:
        if self.delimiter is Delimiter.comma:
            return [field.strip() for field in line.split(",")]
        return line.split()

    def is_comment(self, line: str) -> bool:
        return line.startswith(self.comment_prefixes)

    def time_index(self, columns: int) -> int:
        if self.time_column is not None:
            return self.time_column
        return 2 if columns == 3 else 3


def parse_edge_list(
    stream: IO[bytes] | bytes | str | Iterable[str],
    fmt: EdgeListFormat | None = None,
) -> list[EdgeRecord]:
    """Parse a temporal edge list

    One record is produced for each line which is neither blank nor a comment.
    An empty input produces an empty list.

    :param stream: a binary stream, raw bytes, text or an iterable of lines
    :param fmt: the file layout, when not provided it is detected from the
        first data line
    """
    lines = [_decode(raw, number) for number, raw in enumerate(_lines(stream), 1)]
    if fmt is None:
        fmt = detect_format(lines)
    records: list[EdgeRecord] = []
    header_checked = False
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or fmt.is_comment(line):
            continue
        fields = fmt.split(line)
        if not header_checked:
            header_checked = True
            if fmt.delimiter is Delimiter.comma and _is_header(fields):
                continue
        if len(fields) < 3:
            raise EdgeListParseError(
                f"expected at least 3 columns, got {len(fields)}: {line!r}", number
            )
        column = fmt.time_index(len(fields))
        if column >= len(fields):
            raise EdgeListParseError(
                f"no time column {column} in {len(fields)} columns: {line!r}", number
            )
        try:
            time = int(fields[column])
        except ValueError:
            raise EdgeListParseError(
                f"non-numeric time {fields[column]!r}", number
            ) from None
        records.append(EdgeRecord(fields[0], fields[1], time, number))
    return records


def detect_format(lines: Iterable[str]) -> EdgeListFormat:
    """Detect the delimiter from the first data line

    Whitespace is tried first, unless its fields end with a comma, then comma.
    """
    default = EdgeListFormat()
    for raw in lines:
        line = raw.strip()
        if not line or default.is_comment(line):
            continue
        tokens = line.split()
        if len(tokens) >= 3 and not any(token.endswith(",") for token in tokens):
            return default
        if len(line.split(",")) >= 3:
            return EdgeListFormat(delimiter=Delimiter.comma)
        break
    return default


def load_dataset(
    path: str | Path, fmt: EdgeListFormat | None = None
) -> TemporalGraph:
    """Load a temporal edge list file into a :class:`.TemporalGraph`

    :param path: path to the edge list
    :param fmt: file layout, autodetected when not provided
    """
    path = Path(path)
    with path.open("rb") as stream:
        records = parse_edge_list(stream, fmt)
    graph = build_graph((r.src, r.dst, r.time) for r in records)
    logger.info(
        "loaded %s: %d nodes, %d temporal edges, time span %d",
        path.name,
        graph.num_nodes,
        graph.num_edges,
        graph.time_span,
    )
    return graph


def write_edge_list(graph: TemporalGraph, stream: IO[str]) -> None:
    """Write a graph in the canonical ``src dst time`` whitespace format"""
    for src, dst, time in graph.edge_triples():
        stream.write(f"{src} {dst} {time}\n")


def dumps_edge_list(graph: TemporalGraph) -> str:
    buffer = io.StringIO()
    write_edge_list(graph, buffer)
    return buffer.getvalue()


def _lines(
    stream: IO[bytes] | bytes | str | Iterable[str],
) -> Iterable[str | bytes]:
    if isinstance(stream, (bytes, str)):
        return stream.splitlines()
    return stream


def _decode(raw: str | bytes, number: int) -> str:
    if isinstance(raw, str):
        return raw
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EdgeListParseError(
            f"invalid utf-8 byte at column {exc.start + 1}", number
        ) from None


def _is_header(fields: list[str]) -> bool:
    return tuple(field.lower() for field in fields[:3]) == CSV_HEADER
