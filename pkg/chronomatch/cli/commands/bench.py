from __future__ import annotations

from pathlib import Path

import click
from ccy.cli.console import df_to_rich

from chronomatch.bench.harness import Baseline, BenchConfig, run_bench
from chronomatch.utils.durations import parse_duration

from .. import settings
from .base import (
    BUILTIN_PREFIX,
    CmCommand,
    CmContext,
    InputError,
    input_errors,
    options,
    split_list,
)


@click.command(cls=CmCommand)
@options.graph
@options.file_format
@click.option(
    "--motifs",
    "motif_names",
    default=settings.BENCH_MOTIFS,
    show_default=True,
    help="Comma separated motifs, builtin names or motif file paths",
)
@click.option(
    "--deltas",
    default=settings.BENCH_DELTAS,
    show_default=True,
    help="Comma separated windows, for example 3600,1d,1w",
)
@click.option(
    "--time-cap",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Seconds allowed to each static search, capped cells are marked with >",
)
@click.option(
    "--baseline",
    type=click.Choice(tuple(b.value for b in Baseline)),
    default=Baseline.backtrack.value,
    show_default=True,
    help="Static matcher",
)
@click.option("--dedup", is_flag=True, help="Also count distinct static edge sets")
@click.option(
    "-j",
    "--jobs",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Number of cells run in parallel",
)
@click.option(
    "--warmup/--no-warmup",
    default=True,
    show_default=True,
    help="Discard a first temporal run of each cell",
)
@click.option("--name", default=None, help="Graph name in the report")
@options.out
@click.option(
    "--plot-data",
    type=click.Path(path_type=Path, dir_okay=False, writable=True),
    default=None,
    help="CSV file of subgraph count ratio and speed up of each cell",
)
def bench(
    graph_path: Path,
    file_format: str | None,
    motif_names: str,
    deltas: str,
    time_cap: float | None,
    baseline: str,
    dedup: bool,
    jobs: int,
    warmup: bool,
    name: str | None,
    out: Path | None,
    plot_data: Path | None,
) -> None:
    """Compare temporal and static matching times on a temporal edge list"""
    ctx = CmContext.current()
    try:
        windows = tuple(parse_duration(delta) for delta in split_list(deltas))
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--deltas") from e
    labels = split_list(motif_names)
    if not labels or not windows:
        raise InputError("at least one motif and one delta are required")
    motifs = {motif_name(label): ctx.load_motif(label) for label in labels}
    graph = ctx.load_graph(graph_path, file_format)
    config = BenchConfig(
        deltas=windows,
        time_cap=time_cap,
        baseline=Baseline(baseline),
        dedup=dedup,
        jobs=jobs,
        warmup=warmup,
    )
    with input_errors():
        try:
            report = run_bench(graph, motifs, config, name=name or graph_path.stem)
        except ImportError as e:
            raise InputError(str(e)) from e
        if plot_data is not None:
            report.write_plot_data(plot_data)
        if out is not None:
            report.write_csv(out)
    if out is None:
        ctx.app.echo(report.df.write_csv())
    else:
        ctx.app.print(df_to_rich(report.df.to_pandas()))


def motif_name(spec: str) -> str:
    """Name of a motif in the report"""
    if spec.lower().startswith(BUILTIN_PREFIX):
        return spec[len(BUILTIN_PREFIX) :]
    path = Path(spec)
    return path.stem if path.exists() else spec
