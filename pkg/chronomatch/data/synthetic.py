from __future__ import annotations

import numpy as np

from chronomatch.graph.temporal import TemporalGraph, from_arrays
from chronomatch.utils.types import as_int_array


def random_temporal_graph(
    nodes: int,
    edges: int,
    *,
    time_span: int = 1000,
    self_loops: bool = False,
    seed: int | np.random.Generator | None = None,
) -> TemporalGraph:
    """A uniform random temporal multi-digraph

    Timestamps are drawn uniformly in ``[0, time_span]`` so ties are frequent
    for small spans.

    :param nodes: number of nodes, labelled ``0..nodes-1``
    :param edges: number of temporal edges
    :param time_span: largest timestamp
    :param self_loops: allow edges from a node to itself
    :param seed: random seed or generator
    """
    rng = np.random.default_rng(seed)
    src = rng.integers(0, nodes, size=edges)
    dst = rng.integers(0, nodes, size=edges)
    if not self_loops and nodes > 1:
        # shift loops to a different destination
        loops = src == dst
        dst[loops] = (dst[loops] + rng.integers(1, nodes, size=loops.sum())) % nodes
    time = np.sort(rng.integers(0, time_span + 1, size=edges), kind="stable")
    return from_arrays(
        list(range(nodes)), as_int_array(src), as_int_array(dst), as_int_array(time)
    )


def constant_rate_graph(
    nodes: int,
    edges: int,
    *,
    window: int,
    per_window: int,
    seed: int | np.random.Generator | None = None,
) -> TemporalGraph:
    """A random temporal graph with a constant number of edges per window

    Edges are evenly spaced in time so that every window of length ``window``
    holds about ``per_window`` edges, whatever the total number of edges.

    :param nodes: number of nodes
    :param edges: number of temporal edges
    :param window: window length in time units
    :param per_window: expected number of edges inside a window
    :param seed: random seed or generator
    """
    rng = np.random.default_rng(seed)
    src = rng.integers(0, nodes, size=edges)
    dst = (src + rng.integers(1, nodes, size=edges)) % nodes
    time = (np.arange(edges, dtype=np.int64) * window) // max(per_window, 1)
    return from_arrays(
        list(range(nodes)), as_int_array(src), as_int_array(dst), as_int_array(time)
    )
