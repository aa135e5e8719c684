import math

import pytest

from chronomatch.data.synthetic import random_temporal_graph
from chronomatch.graph.static import merge_parallel_edges
from chronomatch.graph.temporal import build_graph
from chronomatch.match.baseline import (
    all_embeddings,
    dedup_by_edge_set,
    matching_order,
    static_match,
    static_participation,
    vf2_static_match,
)
from chronomatch.match.engine import MatchQuery, UnknownRole, temporal_match
from chronomatch.motifs.builtin import builtin_motif, cycle, path
from chronomatch.motifs.motif import Motif
from chronomatch_tests.utils import fig1


def test_fig1_static_cycles() -> None:
    s = merge_parallel_edges(fig1())
    embeddings = all_embeddings(s, cycle(3))
    assert len(embeddings) == 12
    assert len(set(embeddings)) == 12
    assert dedup_by_edge_set(cycle(3), embeddings) == 4
    labels = {frozenset(s.labels[n] for n in e) for e in embeddings}
    assert labels == {
        frozenset("BCE"),
        frozenset("ABC"),
        frozenset("BDE"),
        frozenset("CEF"),
    }


@pytest.mark.parametrize("seed", [3, 5, 8])
def test_dedup_path_keeps_every_embedding(seed: int) -> None:
    s = merge_parallel_edges(random_temporal_graph(10, 120, seed=seed))
    motif = builtin_motif("M2")
    embeddings = all_embeddings(s, motif)
    assert embeddings
    assert dedup_by_edge_set(motif, embeddings) == len(embeddings)


def test_dedup_star_leaves() -> None:
    hub = [("x", "h", 1)] + [("h", leaf, t) for t, leaf in enumerate("pqrs", 2)]
    s = merge_parallel_edges(build_graph(hub))
    motif = builtin_motif("M5")
    embeddings = all_embeddings(s, motif)
    # 4 * 3 * 2 ordered choices of the three leaves
    assert len(embeddings) == 24
    assert dedup_by_edge_set(motif, embeddings) == len(embeddings) // 6 == 4


def test_embeddings_preserve_edges() -> None:
    g = random_temporal_graph(12, 150, seed=7)
    s = merge_parallel_edges(g)
    for name in ("M1", "M2", "M4", "M6"):
        motif = builtin_motif(name)
        for e in all_embeddings(s, motif):
            assert len(set(e)) == motif.num_nodes
            for src, dst in motif.static_edges():
                assert s.has_edge(e[src], e[dst])


def test_injectivity_only() -> None:
    s = merge_parallel_edges(fig1())
    motif = Motif(nodes=("a", "b", "c"), edges=())
    n = s.num_nodes
    assert static_match(s, motif).count == n * (n - 1) * (n - 2)
    too_big = Motif(nodes=tuple("abcdefg"), edges=())
    assert static_match(s, too_big).count == 0


def test_self_loop_motif() -> None:
    s = merge_parallel_edges(build_graph([("x", "x", 1), ("x", "y", 2)]))
    loop = Motif(nodes=("a",), edges=((0, 0),))
    assert all_embeddings(s, loop) == [(0,)]


def test_temporal_count_within_static() -> None:
    g = random_temporal_graph(10, 100, time_span=50, seed=2)
    s = merge_parallel_edges(g)
    # every temporal match is a static embedding of the same nodes
    for motif in (cycle(3), path(2)):
        found: list = []
        temporal_match(g, MatchQuery(motif=motif, delta=math.inf), found.append)
        embeddings = set(all_embeddings(s, motif))
        assert {m.node_map for m in found} <= embeddings


def test_matching_order() -> None:
    order = matching_order(builtin_motif("M5"))
    assert order[0] == 1
    assert sorted(order) == list(range(5))


def test_time_cap() -> None:
    s = merge_parallel_edges(random_temporal_graph(200, 400, seed=1))
    motif = Motif(nodes=("a", "b", "c"), edges=())
    summary = static_match(s, motif, time_cap=1e-9)
    assert summary.timed_out
    assert summary.count < 200 * 199 * 198


def test_static_participation() -> None:
    s = merge_parallel_edges(fig1())
    counts = static_participation(s, cycle(3), role="a")
    by_label = {s.labels[n]: c for n, c in counts.items()}
    assert by_label == dict(A=1, B=3, C=3, E=3, D=1, F=1)
    assert sum(static_participation(s, cycle(3)).values()) == 36
    with pytest.raises(UnknownRole):
        static_participation(s, cycle(3), role="x")


def test_vf2_agrees() -> None:
    pytest.importorskip("networkx")
    g = random_temporal_graph(15, 120, seed=4)
    s = merge_parallel_edges(g)
    for name in ("M1", "M2", "M3", "M4", "M5", "M6", "cycle3"):
        motif = builtin_motif(name)
        ours = all_embeddings(s, motif)
        theirs: list = []
        summary = vf2_static_match(s, motif, theirs.append)
        assert summary.count == len(ours)
        assert set(theirs) == set(ours)
    assert vf2_static_match(merge_parallel_edges(fig1()), cycle(3)).count == 12
