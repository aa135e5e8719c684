"""Search work grows linearly with the number of edges when the number of
edges inside a window is held constant"""

import math
import time
from typing import Callable

import pytest

from chronomatch.data.synthetic import constant_rate_graph
from chronomatch.match.engine import MatchQuery, count_matches, temporal_match
from chronomatch.motifs.builtin import builtin_motif, cycle, path

WINDOW = 100


@pytest.mark.parametrize("name", ["cycle3", "path2", "M2", "M5"])
def test_work_linear_in_edges(name: str) -> None:
    motif = builtin_motif(name)
    query = MatchQuery(motif=motif, delta=WINDOW)
    small = constant_rate_graph(50, 2_000, window=WINDOW, per_window=20, seed=1)
    large = constant_rate_graph(50, 20_000, window=WINDOW, per_window=20, seed=1)
    work_small = temporal_match(small, query).edges_scanned
    work_large = temporal_match(large, query).edges_scanned
    assert work_small > 0
    assert work_large <= 20 * work_small


def test_work_non_decreasing_in_delta() -> None:
    g = constant_rate_graph(30, 5_000, window=WINDOW, per_window=20, seed=2)
    for motif in (cycle(3), path(3)):
        work = [
            temporal_match(g, MatchQuery(motif=motif, delta=delta)).edges_scanned
            for delta in (0, 10, 50, 100, 200, 400)
        ]
        assert work == sorted(work)


def test_window_bounds_work() -> None:
    g = constant_rate_graph(30, 2_000, window=WINDOW, per_window=20, seed=3)
    bounded = temporal_match(g, MatchQuery(motif=path(2), delta=WINDOW))
    unbounded = temporal_match(g, MatchQuery(motif=path(2), delta=math.inf))
    assert bounded.edges_scanned < unbounded.edges_scanned


def best_of(runs: int, fn: Callable[[], object]) -> float:
    timings = []
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - start)
    return min(timings)


def test_wall_time_linear_in_edges() -> None:
    query = MatchQuery(motif=path(1), delta=WINDOW)
    small = constant_rate_graph(50, 5_000, window=WINDOW, per_window=5, seed=4)
    large = constant_rate_graph(50, 50_000, window=WINDOW, per_window=5, seed=4)
    _ = small.view, large.view
    elapsed_small = best_of(3, lambda: count_matches(small, query))
    elapsed_large = best_of(3, lambda: count_matches(large, query))
    assert elapsed_large <= 20 * elapsed_small
