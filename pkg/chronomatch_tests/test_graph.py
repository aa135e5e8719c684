from typing import Any, Iterator

import numpy as np
import pytest

from chronomatch.data.synthetic import random_temporal_graph
from chronomatch.graph import temporal
from chronomatch.graph.static import StaticGraph, merge_parallel_edges
from chronomatch.graph.stats import graph_stats
from chronomatch.graph.temporal import (
    EdgeConstraint,
    GraphConstructionError,
    build_graph,
    candidate_edges,
)
from chronomatch_tests.utils import fig1


def test_build_sorted() -> None:
    g = fig1()
    assert g.num_nodes == 6
    assert g.num_edges == 9
    assert g.labels == ("A", "B", "C", "E", "D", "F")
    assert g.time.tolist() == list(range(1, 10))
    assert [g.label(n) for n in (g.edge(0).src, g.edge(0).dst)] == ["D", "E"]
    assert g.time_span == 8
    assert g.node_id("E") == 3
    assert g.node_id("Z") is None


def test_indexes_cover_every_edge() -> None:
    g = fig1()
    outs = sorted(i for n in range(g.num_nodes) for i in g.out_index(n).tolist())
    ins = sorted(i for n in range(g.num_nodes) for i in g.in_index(n).tolist())
    pairs = sorted(i for seq in g.pair_index.values() for i in seq.tolist())
    assert outs == ins == pairs == list(range(g.num_edges))
    for n in range(g.num_nodes):
        out = g.out_index(n)
        assert np.all(np.diff(out) > 0)
        assert np.all(g.src[out] == n)
        assert np.all(g.dst[g.in_index(n)] == n)
    for (s, d), seq in g.pair_index.items():
        assert np.all(g.src[seq] == s)
        assert np.all(g.dst[seq] == d)


def test_graph_is_immutable() -> None:
    g = fig1()
    with pytest.raises(ValueError):
        g.time[0] = 100
    with pytest.raises(ValueError):
        g.labels = ()  # type: ignore


def test_ties_keep_input_order() -> None:
    g = build_graph([("x", "y", 5), ("y", "z", 5), ("z", "x", 1), ("x", "z", 5)])
    assert list(g.edge_triples()) == [
        ("z", "x", 1),
        ("x", "y", 5),
        ("y", "z", 5),
        ("x", "z", 5),
    ]


def test_empty_graph() -> None:
    g = build_graph([])
    assert g.num_nodes == 0
    assert g.num_edges == 0
    assert g.time_span == 0
    assert list(candidate_edges(g, EdgeConstraint.unconstrained())) == []


def test_build_errors() -> None:
    with pytest.raises(GraphConstructionError, match="3 fields"):
        build_graph([("a", "b")])
    with pytest.raises(GraphConstructionError, match="non-integer time"):
        build_graph([("a", "b", 1.5)])
    with pytest.raises(GraphConstructionError, match="non-integer time"):
        build_graph([("a", "b", True)])
    with pytest.raises(GraphConstructionError, match="edge attributes"):
        build_graph([("a", "b", 1)], edge_attrs=[1, 2])


def test_attributes() -> None:
    g = build_graph(
        [("a", "b", 2), ("b", "c", 1)],
        node_attrs={"a": 1, "c": 3},
        edge_attrs=[10, 20],
    )
    assert g.node_attrs is not None and g.edge_attrs is not None
    assert g.node_attrs.tolist() == [1, -1, 3]
    # edge attributes follow the chronological sort
    assert g.edge_attrs.tolist() == [20, 10]


def test_candidate_edges() -> None:
    g = fig1()
    b, c, e = g.node_id("B"), g.node_id("C"), g.node_id("E")
    assert list(candidate_edges(g, EdgeConstraint.from_node(b))) == [1, 5]
    assert list(candidate_edges(g, EdgeConstraint.from_node(b), 2)) == [5]
    assert list(candidate_edges(g, EdgeConstraint.pair(c, e))) == [3]
    assert list(candidate_edges(g, EdgeConstraint.into(b))) == [2, 6]
    assert list(candidate_edges(g, EdgeConstraint.into(b), 0, 6)) == [2]
    assert list(candidate_edges(g, EdgeConstraint.unconstrained(), 7)) == [7, 8]
    assert list(candidate_edges(g, EdgeConstraint.unconstrained(), 0, 3)) == [0, 1, 2]
    assert list(candidate_edges(g, EdgeConstraint.pair(e, c))) == []
    assert list(candidate_edges(g, EdgeConstraint.unconstrained(), 9)) == []


class CountingList(list):
    """A list recording every position read through indexing"""

    def __init__(self, items: list[int]) -> None:
        super().__init__(items)
        self.reads: list[int] = []

    def __getitem__(self, position: Any) -> Any:
        self.reads.append(position)
        return super().__getitem__(position)

    def __iter__(self) -> Iterator[int]:
        for position in range(len(self)):
            yield self[position]


def test_candidate_edges_seek_skips_prefix(monkeypatch: pytest.MonkeyPatch) -> None:
    g = build_graph([("a", "b", t) for t in range(10_000)])
    sequence = CountingList(list(range(g.num_edges)))
    monkeypatch.setattr(temporal, "index_sequence", lambda *args: sequence)
    edges = candidate_edges(g, EdgeConstraint.from_node(0), 9_990, 9_992)
    assert list(edges) == [9_990, 9_991, 9_992]
    # binary search plus the yielded edges and the one past the time bound
    assert len(sequence.reads) < 30
    assert min(sequence.reads) > 0


def test_merge_parallel_edges() -> None:
    g = build_graph([("a", "b", 1), ("a", "b", 2), ("b", "a", 3), ("a", "a", 4)])
    s = merge_parallel_edges(g)
    assert s.num_nodes == 2
    assert s.num_edges == 3
    assert s.edges() == [(0, 0), (0, 1), (1, 0)]
    assert s.has_edge(0, 1)
    assert not s.has_edge(1, 1)
    assert s.successors == [(0, 1), (0,)]
    assert s.predecessors == [(0, 1), (0,)]


def test_static_graph_fig1() -> None:
    s = merge_parallel_edges(fig1())
    assert s.num_edges == 9
    assert s.num_edges <= fig1().num_edges


def labelled_pairs(s: StaticGraph) -> set[tuple[Any, Any]]:
    return {(s.labels[u], s.labels[v]) for u, v in s.edges()}


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_merge_parallel_edges_idempotent(seed: int) -> None:
    g = random_temporal_graph(12, 200, seed=seed, self_loops=True)
    once = merge_parallel_edges(g)
    rebuilt = build_graph([(g.labels[u], g.labels[v], 0) for u, v in once.edges()])
    twice = merge_parallel_edges(rebuilt)
    assert twice.num_edges == once.num_edges
    assert labelled_pairs(twice) == labelled_pairs(once)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_merge_parallel_edges_ignores_input_order(seed: int) -> None:
    triples = list(random_temporal_graph(12, 200, seed=seed).edge_triples())
    shuffled = list(triples)
    np.random.default_rng(seed).shuffle(shuffled)
    a = merge_parallel_edges(build_graph(triples))
    b = merge_parallel_edges(build_graph(shuffled))
    assert labelled_pairs(a) == labelled_pairs(b)


def test_graph_stats() -> None:
    g = build_graph([("a", "b", 0), ("a", "b", 0), ("b", "b", 86400)])
    stats = graph_stats(g)
    assert stats.nodes == 2
    assert stats.edges == 3
    assert stats.static_edges == 2
    assert stats.time_span == 86400
    assert stats.time_span_days == 1
    assert stats.self_loops == 1
    assert stats.tied_edges == 1
