"""Benchmark temporal matching against static matching on the merged graph

Only search time is measured, graphs are loaded and indexed before any clock
starts.
"""

from __future__ import annotations

import enum
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable

import numpy as np
import polars as pl
from pydantic import BaseModel, Field

from chronomatch.graph.static import StaticGraph, merge_parallel_edges
from chronomatch.graph.temporal import TemporalGraph
from chronomatch.match.baseline import (
    Embedding,
    StaticSummary,
    induced_edge_set,
    static_match,
    vf2_static_match,
)
from chronomatch.match.engine import MatchQuery, temporal_match
from chronomatch.motifs.motif import Motif
from chronomatch.utils.durations import format_duration
from chronomatch.utils.types import Duration

logger = logging.getLogger(__name__)

REPORT_COLUMNS = (
    "graph",
    "motif",
    "delta",
    "temporal_count",
    "temporal_sec",
    "static_count",
    "static_sec",
    "speedup",
    "k_window",
)
PLOT_COLUMNS = ("graph", "motif", "delta", "ratio", "speedup")


class Baseline(enum.StrEnum):
    backtrack = "backtrack"
    """The built-in backtracking matcher"""
    vf2 = "vf2"
    """networkx VF2, requires the vf2 extra"""


class BenchConfig(BaseModel, frozen=True):
    deltas: tuple[Duration, ...] = Field(description="windows to benchmark")
    time_cap: float | None = Field(
        default=None, gt=0, description="seconds allowed to each static search"
    )
    baseline: Baseline = Baseline.backtrack
    dedup: bool = Field(
        default=False, description="also count distinct static edge sets"
    )
    jobs: int = Field(default=1, ge=1, description="cells run in parallel")
    warmup: bool = Field(default=True, description="discard a first temporal run")


class StaticResult(BaseModel, frozen=True):
    count: int
    seconds: float
    timed_out: bool = False
    subgraphs: int | None = None


class BenchRow(BaseModel, frozen=True):
    """Result of a single (motif, delta) cell"""

    graph: str
    motif: str
    delta: Duration
    temporal_count: int
    temporal_sec: float
    static_count: int
    static_sec: float
    static_timed_out: bool = False
    static_subgraphs: int | None = None
    k_window: float = 0.0

    @property
    def speedup(self) -> float | None:
        """Static over temporal search time, a lower bound when the static
        search was capped"""
        if self.temporal_sec <= 0:
            return None
        return self.static_sec / self.temporal_sec

    @property
    def ratio(self) -> float | None:
        """Static over temporal subgraph count"""
        if not self.temporal_count:
            return None
        return self.static_count / self.temporal_count

    def record(self, dedup: bool = False) -> dict[str, Any]:
        """The row as rendered in the report, capped values are prefixed
        with ``>``"""
        speedup = self.speedup
        cap = "> " if self.static_timed_out else ""
        record = {
            "graph": self.graph,
            "motif": self.motif,
            "delta": format_duration(self.delta),
            "temporal_count": str(self.temporal_count),
            "temporal_sec": f"{self.temporal_sec:.6f}",
            "static_count": f"{cap}{self.static_count}",
            "static_sec": f"{cap}{self.static_sec:.6f}",
            "speedup": "" if speedup is None else f"{cap}{speedup:.3f}",
            "k_window": f"{self.k_window:.3f}",
        }
        if dedup:
            record["static_subgraphs"] = (
                "" if self.static_subgraphs is None else str(self.static_subgraphs)
            )
        return record


class BenchReport(BaseModel, frozen=True):
    rows: tuple[BenchRow, ...] = ()
    dedup: bool = False

    @property
    def df(self) -> pl.DataFrame:
        """Rendered report, all columns are strings"""
        columns = list(REPORT_COLUMNS)
        if self.dedup:
            columns.append("static_subgraphs")
        return pl.DataFrame(
            [row.record(self.dedup) for row in self.rows],
            schema={name: pl.String for name in columns},
        )

    @property
    def plot_data(self) -> pl.DataFrame:
        """Count ratio and speed up of each cell, for log-log plotting

        Cells without temporal matches or with a zero time are left out.
        """
        records = [
            {
                "graph": row.graph,
                "motif": row.motif,
                "delta": format_duration(row.delta),
                "ratio": row.ratio,
                "speedup": row.speedup,
            }
            for row in self.rows
            if row.ratio is not None and row.speedup is not None
        ]
        return pl.DataFrame(
            records,
            schema={
                "graph": pl.String,
                "motif": pl.String,
                "delta": pl.String,
                "ratio": pl.Float64,
                "speedup": pl.Float64,
            },
        )

    def write_csv(self, path: str | Path) -> None:
        self.df.write_csv(path)

    def write_plot_data(self, path: str | Path) -> None:
        self.plot_data.write_csv(path)


def k_window(graph: TemporalGraph, delta: Duration) -> float:
    """Mean number of edges with timestamp in ``[t_i, t_i + delta]`` over all
    edges ``i``, the edge itself included"""
    n = graph.num_edges
    if not n:
        return 0.0
    starts = np.arange(n)
    if math.isinf(delta):
        return float(np.mean(n - starts))
    ends = np.searchsorted(graph.time, graph.time + delta, side="right")
    return float(np.mean(ends - starts))


def timed(run: Callable[[], Any], warmup: bool = False) -> tuple[Any, float]:
    """Result and wall clock seconds of ``run``, optionally after a discarded
    first call"""
    if warmup:
        run()
    start = time.perf_counter()
    result = run()
    return result, time.perf_counter() - start


def run_static(
    graph: StaticGraph,
    motif: Motif,
    *,
    baseline: Baseline = Baseline.backtrack,
    time_cap: float | None = None,
    dedup: bool = False,
) -> StaticResult:
    """Time the static baseline of a motif"""
    edge_sets: set[frozenset[tuple[int, int]]] = set()

    def collect(embedding: Embedding) -> None:
        edge_sets.add(induced_edge_set(motif, embedding))

    sink = collect if dedup else None

    matcher = vf2_static_match if baseline is Baseline.vf2 else static_match
    # prime the cached adjacency so that it is not timed
    _ = graph.edge_set, graph.successors, graph.predecessors
    summary: StaticSummary
    summary, seconds = timed(lambda: matcher(graph, motif, sink, time_cap=time_cap))
    return StaticResult(
        count=summary.count,
        seconds=seconds,
        timed_out=summary.timed_out,
        subgraphs=len(edge_sets) if dedup else None,
    )


def run_bench(
    graph: TemporalGraph,
    motifs: dict[str, Motif],
    config: BenchConfig,
    *,
    name: str = "graph",
) -> BenchReport:
    """Run every (motif, delta) cell

    The static baseline does not depend on the window so it runs once per
    motif. Rows are ordered by motif and then by delta, whatever the number
    of jobs.
    """
    static = merge_parallel_edges(graph)
    _ = graph.view
    cells = [(label, delta) for label in motifs for delta in config.deltas]

    def static_cell(label: str) -> StaticResult:
        result = run_static(
            static,
            motifs[label],
            baseline=config.baseline,
            time_cap=config.time_cap,
            dedup=config.dedup,
        )
        logger.info(
            "%s %s static: %d embeddings in %.3fs%s",
            name,
            label,
            result.count,
            result.seconds,
            " (capped)" if result.timed_out else "",
        )
        return result

    def temporal_cell(cell: tuple[str, Duration]) -> tuple[int, float]:
        label, delta = cell
        query = MatchQuery(motif=motifs[label], delta=delta)
        summary, seconds = timed(
            lambda: temporal_match(graph, query), warmup=config.warmup
        )
        logger.info(
            "%s %s delta=%s: %d matches in %.3fs",
            name,
            label,
            format_duration(delta),
            summary.count,
            seconds,
        )
        return summary.count, seconds

    with ThreadPoolExecutor(max_workers=config.jobs) as executor:
        statics = dict(zip(motifs, executor.map(static_cell, motifs)))
        temporals = list(executor.map(temporal_cell, cells))

    windows = {delta: k_window(graph, delta) for delta in config.deltas}
    rows = [
        BenchRow(
            graph=name,
            motif=label,
            delta=delta,
            temporal_count=count,
            temporal_sec=seconds,
            static_count=statics[label].count,
            static_sec=statics[label].seconds,
            static_timed_out=statics[label].timed_out,
            static_subgraphs=statics[label].subgraphs,
            k_window=windows[delta],
        )
        for (label, delta), (count, seconds) in zip(cells, temporals)
    ]
    return BenchReport(rows=tuple(rows), dedup=config.dedup)

