import math

import numpy as np
import pytest

from chronomatch.data.synthetic import constant_rate_graph, random_temporal_graph
from chronomatch.utils.durations import format_duration, parse_duration


def test_parse_duration() -> None:
    assert parse_duration("3600") == 3600
    assert parse_duration("1h") == 3600
    assert parse_duration("1d") == 86400
    assert parse_duration("1w") == 604800
    assert parse_duration("15m") == 900
    assert parse_duration("inf") == math.inf
    assert parse_duration("∞") == math.inf
    assert parse_duration(0) == 0
    assert parse_duration(60.0) == 60
    for bad in ("-1", "1y", "", "h", -5, 1.5, True):
        with pytest.raises(ValueError):
            parse_duration(bad)


def test_format_duration() -> None:
    assert format_duration(3600) == "1h"
    assert format_duration(86400) == "1d"
    assert format_duration(604800) == "1w"
    assert format_duration(90) == "90"
    assert format_duration(0) == "0"
    assert format_duration(math.inf) == "inf"
    for value in (0, 59, 120, 7200, 172800, math.inf):
        assert parse_duration(format_duration(value)) == value


def test_random_temporal_graph() -> None:
    g = random_temporal_graph(10, 500, time_span=100, seed=42)
    assert g.num_nodes == 10
    assert g.num_edges == 500
    assert np.all(np.diff(g.time) >= 0)
    assert not np.any(g.src == g.dst)
    assert g.time.min() >= 0 and g.time.max() <= 100
    same = random_temporal_graph(10, 500, time_span=100, seed=42)
    assert list(same.edge_triples()) == list(g.edge_triples())
    loops = random_temporal_graph(3, 300, self_loops=True, seed=1)
    assert np.any(loops.src == loops.dst)


def test_constant_rate_graph() -> None:
    g = constant_rate_graph(20, 200, window=50, per_window=10, seed=0)
    assert g.num_edges == 200
    assert not np.any(g.src == g.dst)
    assert g.time[-1] == 199 * 5
