from __future__ import annotations

from pathlib import Path
from typing import Any, Callable

import click
import polars as pl
from ccy.cli.console import df_to_rich

from chronomatch.analytics.ranking import rank_nodes
from chronomatch.graph.static import merge_parallel_edges
from chronomatch.graph.stats import graph_stats
from chronomatch.graph.temporal import TemporalGraph
from chronomatch.match.baseline import static_participation
from chronomatch.match.engine import (
    Match,
    MatchMode,
    MatchQuery,
    node_participation,
    temporal_match,
)
from chronomatch.motifs.builtin import BUILTIN
from chronomatch.motifs.motif import Motif, render_motif
from chronomatch.utils.durations import format_duration
from chronomatch.utils.types import Duration

from .. import settings
from .base import CmCommand, CmContext, input_errors, options

LONG_SCHEMA = {
    "match": pl.Int64,
    "rank": pl.Int64,
    "edge_index": pl.Int64,
    "src": pl.String,
    "dst": pl.String,
    "time": pl.Int64,
}


class MatchWriter:
    """Write matches as CSV in chunks of rows

    The wide layout has one row per match, the long layout one row per
    matched edge.
    """

    def __init__(
        self,
        graph: TemporalGraph,
        motif: Motif,
        write: Callable[[str], Any],
        *,
        long: bool = False,
        chunk_size: int = settings.MATCH_CHUNK_SIZE,
    ) -> None:
        self.graph = graph
        self.motif = motif
        self.write = write
        self.long = long
        self.chunk_size = chunk_size
        self.schema = LONG_SCHEMA if long else wide_schema(motif)
        self.rows: list[dict[str, Any]] = []
        self.written = 0
        self.header = True

    def __call__(self, match: Match) -> None:
        self.written += 1
        if self.long:
            self.rows.extend(self.long_records(match))
        else:
            self.rows.append(self.wide_record(match))
        if len(self.rows) >= self.chunk_size:
            self.flush()

    def wide_record(self, match: Match) -> dict[str, Any]:
        labels = self.graph.labels
        record: dict[str, Any] = {"match": self.written}
        for rank, edge in enumerate(match.edges, start=1):
            e = self.graph.edge(edge)
            record[f"edge_{rank}"] = edge
            record[f"src_{rank}"] = str(labels[e.src])
            record[f"dst_{rank}"] = str(labels[e.dst])
            record[f"time_{rank}"] = e.time
        for label, node in zip(self.motif.nodes, match.node_map):
            record[f"node_{label}"] = str(labels[node])
        record["t_start"] = match.t_start
        record["t_end"] = match.t_end
        return record

    def long_records(self, match: Match) -> list[dict[str, Any]]:
        labels = self.graph.labels
        records = []
        for rank, edge in enumerate(match.edges, start=1):
            e = self.graph.edge(edge)
            records.append(
                {
                    "match": self.written,
                    "rank": rank,
                    "edge_index": edge,
                    "src": str(labels[e.src]),
                    "dst": str(labels[e.dst]),
                    "time": e.time,
                }
            )
        return records

    def flush(self) -> None:
        if not self.rows and not self.header:
            return
        df = pl.DataFrame(self.rows, schema=self.schema)
        self.write(df.write_csv(include_header=self.header))
        self.header = False
        self.rows = []


def wide_schema(motif: Motif) -> dict[str, Any]:
    schema: dict[str, Any] = {"match": pl.Int64}
    for rank in range(1, motif.num_edges + 1):
        schema[f"edge_{rank}"] = pl.Int64
        schema[f"src_{rank}"] = pl.String
        schema[f"dst_{rank}"] = pl.String
        schema[f"time_{rank}"] = pl.Int64
    for label in motif.nodes:
        schema[f"node_{label}"] = pl.String
    schema["t_start"] = pl.Int64
    schema["t_end"] = pl.Int64
    return schema


def write_output(ctx: CmContext, text: str, out: Path | None) -> None:
    if out is None:
        ctx.app.echo(text)
    else:
        with input_errors():
            out.write_text(text, encoding="utf-8")


@click.command(cls=CmCommand)
@options.graph
@options.file_format
@options.motif
@options.delta
@options.limit
@options.attributes
@options.out
@click.option("--long", is_flag=True, help="One row per matched edge")
def match(
    graph_path: Path,
    file_format: str | None,
    motif: str,
    delta: Duration,
    limit: int | None,
    attributes: bool,
    out: Path | None,
    long: bool,
) -> None:
    """Enumerate the temporal matches of a motif as CSV"""
    ctx = CmContext.current()
    graph = ctx.load_graph(graph_path, file_format)
    query = MatchQuery(
        motif=ctx.load_motif(motif), delta=delta, limit=limit, attributes=attributes
    )
    if out is None:
        writer = MatchWriter(graph, query.motif, ctx.app.echo, long=long)
        summary = temporal_match(graph, query, writer)
        writer.flush()
    else:
        with input_errors():
            with out.open("w", encoding="utf-8") as stream:
                writer = MatchWriter(graph, query.motif, stream.write, long=long)
                summary = temporal_match(graph, query, writer)
                writer.flush()
    truncated = f", truncated at limit {limit}" if summary.truncated else ""
    ctx.app.info(
        f"{summary.count} matches of {query.motif.describe()} with delta "
        f"{format_duration(delta)}, {summary.edges_scanned} edges scanned{truncated}"
    )


@click.command(cls=CmCommand)
@options.graph
@options.file_format
@options.motif
@options.delta
@options.limit
@options.attributes
def count(
    graph_path: Path,
    file_format: str | None,
    motif: str,
    delta: Duration,
    limit: int | None,
    attributes: bool,
) -> None:
    """Count the temporal matches of a motif"""
    ctx = CmContext.current()
    graph = ctx.load_graph(graph_path, file_format)
    query = MatchQuery(
        motif=ctx.load_motif(motif),
        delta=delta,
        limit=limit,
        attributes=attributes,
        mode=MatchMode.count,
    )
    summary = temporal_match(graph, query)
    click.echo(summary.count)


@click.command(cls=CmCommand)
@options.graph
@options.file_format
@options.motif
@options.delta
@options.attributes
@options.out
@click.option("-r", "--role", default=None, help="Only count this motif node")
@click.option("-t", "--target", default=None, help="Node label to report the rank of")
@click.option(
    "--static",
    "use_static",
    is_flag=True,
    help="Rank by static embeddings of the merged graph, delta is ignored",
)
def rank(
    graph_path: Path,
    file_format: str | None,
    motif: str,
    delta: Duration,
    attributes: bool,
    out: Path | None,
    role: str | None,
    target: str | None,
    use_static: bool,
) -> None:
    """Rank graph nodes by the number of matches they lie on"""
    ctx = CmContext.current()
    graph = ctx.load_graph(graph_path, file_format)
    query = MatchQuery(
        motif=ctx.load_motif(motif),
        delta=delta,
        attributes=attributes,
        mode=MatchMode.participation,
        role=role,
    )
    with input_errors():
        if use_static:
            counts = static_participation(
                merge_parallel_edges(graph), query.motif, role
            )
        else:
            counts = node_participation(graph, query)
    table = rank_nodes(counts, labels=graph.labels, target=target)
    write_output(ctx, table.df.write_csv(), out)
    if target is not None:
        ctx.app.info(table.target_report())


@click.command(cls=CmCommand)
@options.graph
@options.file_format
def stats(graph_path: Path, file_format: str | None) -> None:
    """Display node, edge and time span statistics of a temporal edge list"""
    ctx = CmContext.current()
    graph = ctx.load_graph(graph_path, file_format)
    s = graph_stats(graph)
    df = pl.DataFrame(
        {
            "statistic": [
                "nodes",
                "static edges",
                "temporal edges",
                "time span (s)",
                "time span (days)",
                "self loops",
                "tied edges",
            ],
            "value": [
                f"{s.nodes:,d}",
                f"{s.static_edges:,d}",
                f"{s.edges:,d}",
                f"{s.time_span:,d}",
                f"{s.time_span_days:,.1f}",
                f"{s.self_loops:,d}",
                f"{s.tied_edges:,d}",
            ],
        }
    )
    ctx.app.print(df_to_rich(df.to_pandas()))


@click.command(cls=CmCommand)
@click.argument("name", required=False)
def motifs(name: str | None) -> None:
    """List the builtin motifs or display a motif in the text format"""
    ctx = CmContext.current()
    if name is None:
        builtins = {key: factory() for key, factory in BUILTIN.items()}
        df = pl.DataFrame(
            {
                "name": list(builtins),
                "nodes": [m.num_nodes for m in builtins.values()],
                "edges": [m.num_edges for m in builtins.values()],
                "motif": [m.describe() for m in builtins.values()],
            }
        )
        ctx.app.print(df_to_rich(df.to_pandas()))
        ctx.app.print("cycle(k) and path(k) are also available", style="dim")
        return
    motif = ctx.load_motif(name)
    ctx.app.echo(render_motif(motif))
