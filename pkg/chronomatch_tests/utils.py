from typing import Iterable

from chronomatch.graph.temporal import TemporalGraph, build_graph
from chronomatch.match.engine import Match, MatchQuery

# the running example: one temporal 3-cycle among four static ones
FIG1_EDGES = [
    ("A", "B", 3),
    ("C", "A", 5),
    ("B", "C", 2),
    ("C", "E", 4),
    ("E", "B", 7),
    ("D", "E", 1),
    ("B", "D", 6),
    ("F", "C", 8),
    ("E", "F", 9),
]

# two 3-cycles, only one of them within an hour
FIG2_EDGES = [
    ("A", "B", 240),
    ("B", "C", 245),
    ("C", "A", 690),
    ("C", "D", 250),
    ("D", "B", 255),
]


def fig1() -> TemporalGraph:
    return build_graph(FIG1_EDGES)


def fig2() -> TemporalGraph:
    return build_graph(FIG2_EDGES)


def edge_list_text(edges: Iterable[tuple[str, str, int]]) -> str:
    return "".join(f"{s} {d} {t}\n" for s, d, t in edges)


def check_matches(graph: TemporalGraph, query: MatchQuery, matches: list[Match]):
    """Invariants every list of matches must satisfy"""
    motif = query.motif
    assert len(set(matches)) == len(matches), "duplicate matches"
    assert matches == sorted(matches, key=lambda m: m.edges), "not lexicographic"
    for match in matches:
        assert len(match.edges) == motif.num_edges
        assert list(match.edges) == sorted(set(match.edges)), "indices not ascending"
        assert match.t_end - match.t_start <= query.delta
        assert len(set(match.node_map)) == motif.num_nodes, "mapping not injective"
        for rank, edge in enumerate(match.edges):
            e = graph.edge(edge)
            src, dst = motif.edges[rank]
            assert match.node_map[src] == e.src
            assert match.node_map[dst] == e.dst
