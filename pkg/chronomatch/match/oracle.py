"""Brute force temporal matching

A direct rendition of the definition of a temporal match, used as ground
truth for the search engine. It walks all strictly ascending tuples of edge
indices and keeps those whose first and last timestamps are within the
window and whose edges map consistently and injectively onto the motif.
Both conditions hold for every prefix of a valid tuple, so a tuple is
abandoned as soon as one of its prefixes fails them.
"""

from __future__ import annotations

from chronomatch.graph.temporal import TemporalGraph

from .engine import Match, MatchQuery

MAX_GRAPH_EDGES = 500
MAX_MOTIF_EDGES = 5


class OracleRefusal(ValueError):
    """Raised when an instance is too large for brute force enumeration"""


def brute_force_temporal_match(
    graph: TemporalGraph,
    query: MatchQuery,
    *,
    max_graph_edges: int = MAX_GRAPH_EDGES,
    max_motif_edges: int = MAX_MOTIF_EDGES,
) -> set[Match]:
    """All temporal matches of ``query`` in ``graph``

    :param graph: the temporal graph
    :param query: the query, ``limit`` and ``mode`` are ignored
    :param max_graph_edges: refuse graphs with more edges
    :param max_motif_edges: refuse motifs with more edges
    """
    motif = query.motif
    n, m = graph.num_edges, motif.num_edges
    if n > max_graph_edges or m > max_motif_edges:
        raise OracleRefusal(
            f"brute force on {n} graph edges and {m} motif edges exceeds "
            f"the limits of {max_graph_edges} and {max_motif_edges}"
        )
    if not m or m > n:
        return set()
    src = graph.src.tolist()
    dst = graph.dst.tolist()
    times = graph.time.tolist()
    node_labels = None if graph.node_attrs is None else graph.node_attrs.tolist()
    edge_labels = None if graph.edge_attrs is None else graph.edge_attrs.tolist()
    results: set[Match] = set()
    chosen: list[int] = []

    def attributes_hold(rank: int, edge: int) -> bool:
        u_m, v_m = motif.edges[rank]
        wanted = motif.edge_attr(rank)
        if wanted is not None and (edge_labels is None or edge_labels[edge] != wanted):
            return False
        for node_m, node_g in ((u_m, src[edge]), (v_m, dst[edge])):
            wanted = motif.node_attr(node_m)
            if wanted is not None and (
                node_labels is None or node_labels[node_g] != wanted
            ):
                return False
        return True

    def mapping(edges: list[int]) -> dict[int, int] | None:
        forward: dict[int, int] = {}
        backward: dict[int, int] = {}
        for rank, edge in enumerate(edges):
            u_m, v_m = motif.edges[rank]
            for node_m, node_g in ((u_m, src[edge]), (v_m, dst[edge])):
                if forward.setdefault(node_m, node_g) != node_g:
                    return None
                if backward.setdefault(node_g, node_m) != node_m:
                    return None
        return forward

    def extend(start: int) -> None:
        rank = len(chosen)
        for edge in range(start, n):
            if chosen and times[edge] - times[chosen[0]] > query.delta:
                break
            chosen.append(edge)
            if mapping(chosen) is not None and (
                not query.attributes or attributes_hold(rank, edge)
            ):
                if rank == m - 1:
                    forward = mapping(chosen) or {}
                    results.add(
                        Match(
                            edges=tuple(chosen),
                            node_map=tuple(forward[i] for i in range(motif.num_nodes)),
                            t_start=times[chosen[0]],
                            t_end=times[edge],
                        )
                    )
                else:
                    extend(edge + 1)
            chosen.pop()

    extend(0)
    return results
