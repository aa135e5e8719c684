import math

import polars as pl
import pytest

from chronomatch.bench.harness import (
    PLOT_COLUMNS,
    REPORT_COLUMNS,
    BenchConfig,
    BenchRow,
    k_window,
    run_bench,
    timed,
)
from chronomatch.data.synthetic import constant_rate_graph
from chronomatch.graph.temporal import build_graph
from chronomatch.motifs.builtin import cycle, path
from chronomatch_tests.utils import fig1


def test_k_window() -> None:
    g = fig1()
    assert k_window(g, math.inf) == pytest.approx(5.0)
    assert k_window(g, 0) == pytest.approx(1.0)
    assert k_window(g, 2) == pytest.approx(24 / 9)
    assert k_window(build_graph([]), 10) == 0


def test_k_window_constant_rate() -> None:
    for edges in (1000, 10000):
        g = constant_rate_graph(30, edges, window=100, per_window=20, seed=1)
        assert k_window(g, 100) == pytest.approx(21, rel=0.02)


def test_run_bench_fig1() -> None:
    config = BenchConfig(deltas=(math.inf, 3), warmup=False, dedup=True)
    report = run_bench(fig1(), {"cycle3": cycle(3)}, config, name="fig1")
    assert len(report.rows) == 2
    inf_row, short_row = report.rows
    assert inf_row.temporal_count == 1
    assert short_row.temporal_count == 0
    assert inf_row.static_count == short_row.static_count == 12
    assert inf_row.static_subgraphs == 4
    assert inf_row.k_window == pytest.approx(5.0)
    df = report.df
    assert df.columns == [*REPORT_COLUMNS, "static_subgraphs"]
    assert df["delta"].to_list() == ["inf", "3"]
    assert df["static_subgraphs"].to_list() == ["4", "4"]
    plot = report.plot_data
    assert plot.columns == list(PLOT_COLUMNS)
    assert plot.height <= 1


def test_single_cell_parallel() -> None:
    config = BenchConfig(deltas=(10,), jobs=4)
    report = run_bench(fig1(), {"p2": path(2)}, config)
    assert len(report.rows) == 1
    assert report.df.columns == list(REPORT_COLUMNS)


def test_rows_order_with_jobs() -> None:
    motifs = {"cycle3": cycle(3), "p1": path(1), "p2": path(2)}
    config = BenchConfig(deltas=(1, 5, math.inf), jobs=3, warmup=False)
    report = run_bench(fig1(), motifs, config)
    assert [(r.motif, r.delta) for r in report.rows] == [
        (m, d) for m in motifs for d in (1, 5, math.inf)
    ]
    assert [r.temporal_count for r in report.rows if r.motif == "p1"] == [9, 9, 9]


def test_capped_row_rendering() -> None:
    row = BenchRow(
        graph="g",
        motif="M1",
        delta=3600,
        temporal_count=10,
        temporal_sec=2.0,
        static_count=40,
        static_sec=10.0,
        static_timed_out=True,
    )
    assert row.speedup == pytest.approx(5.0)
    assert row.ratio == pytest.approx(4.0)
    record = row.record()
    assert record["speedup"] == "> 5.000"
    assert record["static_sec"] == "> 10.000000"
    assert record["delta"] == "1h"
    assert "static_subgraphs" not in record


def test_write_reports(tmp_path) -> None:
    config = BenchConfig(deltas=(math.inf,), warmup=False)
    report = run_bench(fig1(), {"cycle3": cycle(3)}, config)
    report.write_csv(tmp_path / "report.csv")
    report.write_plot_data(tmp_path / "plot.csv")
    df = pl.read_csv(tmp_path / "report.csv")
    assert df.columns == list(REPORT_COLUMNS)
    assert df.height == 1
    assert pl.read_csv(tmp_path / "plot.csv").columns == list(PLOT_COLUMNS)


def test_timed_warmup() -> None:
    calls: list[int] = []
    result, seconds = timed(lambda: calls.append(1) or len(calls), warmup=True)
    assert result == 2
    assert seconds >= 0
