"""Static subgraph matching on the merged graph

Non-induced, directed, injective matching: every motif edge, with ranks and
multiplicities removed, must be an edge of the static graph. Extra edges
among the matched nodes are allowed.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from chronomatch.graph.static import StaticGraph
from chronomatch.motifs.motif import Motif

from .engine import UnknownRole

logger = logging.getLogger(__name__)

Embedding = tuple[int, ...]
"""Graph node of each motif node"""
EmbeddingSink = Callable[[Embedding], object]
CHECK_EVERY = 4096


@dataclass(slots=True)
class StaticSummary:
    count: int = 0
    """Number of embeddings found"""
    timed_out: bool = False
    """True when the search stopped at the time cap"""
    elapsed: float = 0.0
    """Search time in seconds"""


@dataclass(frozen=True, slots=True)
class _Step:
    """How a motif node is placed once the previous nodes are mapped"""

    node: int
    out_to: tuple[int, ...]
    """earlier motif nodes this node has an edge to"""
    in_from: tuple[int, ...]
    """earlier motif nodes with an edge to this node"""
    loop: bool


def matching_order(motif: Motif) -> list[int]:
    """Most constrained first ordering of the motif nodes

    The next node is the one with most edges to the nodes already ordered,
    ties broken by degree and then by node id.
    """
    edges = motif.static_edges()
    degree: Counter[int] = Counter()
    for src, dst in edges:
        degree[src] += 1
        degree[dst] += 1
    order: list[int] = []
    remaining = set(range(motif.num_nodes))
    while remaining:
        placed = set(order)

        def score(node: int) -> tuple[int, int, int]:
            links = sum(
                1
                for src, dst in edges
                if (src == node and dst in placed) or (dst == node and src in placed)
            )
            return (-links, -degree[node], node)

        best = min(remaining, key=score)
        order.append(best)
        remaining.remove(best)
    return order


def _plan(motif: Motif) -> list[_Step]:
    edges = motif.static_edges()
    order = matching_order(motif)
    steps = []
    for i, node in enumerate(order):
        earlier = order[:i]
        steps.append(
            _Step(
                node=node,
                out_to=tuple(e for e in earlier if (node, e) in edges),
                in_from=tuple(e for e in earlier if (e, node) in edges),
                loop=(node, node) in edges,
            )
        )
    return steps


def static_match(
    graph: StaticGraph,
    motif: Motif,
    sink: EmbeddingSink | None = None,
    *,
    time_cap: float | None = None,
) -> StaticSummary:
    """Enumerate injective node mappings preserving all motif edges

    Embeddings are delivered to ``sink`` in a deterministic order, candidates
    are tried in ascending node id.

    :param graph: the merged static graph
    :param motif: the motif, ranks are ignored
    :param sink: consumer of embeddings, a tuple with the graph node of each
        motif node
    :param time_cap: stop after this many seconds and flag the summary
    """
    steps = _plan(motif)
    summary = StaticSummary()
    started = time.perf_counter()
    deadline = None if time_cap is None else started + time_cap
    node_map = [-1] * motif.num_nodes
    used = [False] * graph.num_nodes
    succ = graph.successors
    pred = graph.predecessors
    has_edge = graph.edge_set.__contains__
    all_nodes = range(graph.num_nodes)
    ticks = 0

    def candidates(step: _Step) -> Iterable[int]:
        pools: list[Sequence[int]] = [pred[node_map[e]] for e in step.out_to]
        pools.extend(succ[node_map[e]] for e in step.in_from)
        if not pools:
            return all_nodes
        pools.sort(key=len)
        return pools[0]

    def feasible(step: _Step, node: int) -> bool:
        if used[node]:
            return False
        if step.loop and not has_edge((node, node)):
            return False
        for e in step.out_to:
            if not has_edge((node, node_map[e])):
                return False
        for e in step.in_from:
            if not has_edge((node_map[e], node)):
                return False
        return True

    def extend(depth: int) -> bool:
        nonlocal ticks
        if depth == len(steps):
            summary.count += 1
            if sink is not None:
                sink(tuple(node_map))
            return True
        step = steps[depth]
        for node in candidates(step):
            ticks += 1
            if deadline is not None and ticks % CHECK_EVERY == 0:
                if time.perf_counter() > deadline:
                    summary.timed_out = True
                    return False
            if not feasible(step, node):
                continue
            node_map[step.node] = node
            used[node] = True
            keep_going = extend(depth + 1)
            used[node] = False
            node_map[step.node] = -1
            if not keep_going:
                return False
        return True

    if motif.num_nodes <= graph.num_nodes:
        extend(0)
    summary.elapsed = time.perf_counter() - started
    logger.debug(
        "static match %s: %d embeddings in %.3fs%s",
        motif.describe(),
        summary.count,
        summary.elapsed,
        " (timed out)" if summary.timed_out else "",
    )
    return summary


def vf2_static_match(
    graph: StaticGraph,
    motif: Motif,
    sink: EmbeddingSink | None = None,
    *,
    time_cap: float | None = None,
) -> StaticSummary:
    """Same as :func:`static_match` using the networkx VF2 implementation

    It requires networkx installed.
    """
    try:
        import networkx as nx
        from networkx.algorithms.isomorphism import DiGraphMatcher
    except ImportError:  # pragma: no cover
        raise ImportError("networkx is not installed, pip install chronomatch[vf2]")
    host = nx.DiGraph()
    host.add_nodes_from(range(graph.num_nodes))
    host.add_edges_from(graph.edges())
    pattern = nx.DiGraph()
    pattern.add_nodes_from(range(motif.num_nodes))
    pattern.add_edges_from(motif.static_edges())
    summary = StaticSummary()
    started = time.perf_counter()
    matcher = DiGraphMatcher(host, pattern)
    for count, mapping in enumerate(matcher.subgraph_monomorphisms_iter(), start=1):
        summary.count = count
        if sink is not None:
            inverse = {m: g for g, m in mapping.items()}
            sink(tuple(inverse[node] for node in range(motif.num_nodes)))
        if time_cap is not None and time.perf_counter() - started > time_cap:
            summary.timed_out = True
            break
    summary.elapsed = time.perf_counter() - started
    return summary


def induced_edge_set(motif: Motif, embedding: Embedding) -> frozenset[tuple[int, int]]:
    """Static graph edges covered by an embedding"""
    return frozenset((embedding[s], embedding[d]) for s, d in motif.static_edges())


def dedup_by_edge_set(motif: Motif, embeddings: Iterable[Embedding]) -> int:
    """Number of distinct matched edge sets

    Embeddings which differ by an automorphism of the motif cover the same
    static edges and are counted once.
    """
    return len({induced_edge_set(motif, embedding) for embedding in embeddings})


def all_embeddings(graph: StaticGraph, motif: Motif) -> list[Embedding]:
    """All embeddings as a list, for small graphs"""
    found: list[Embedding] = []
    static_match(graph, motif, found.append)
    return found


def static_participation(
    graph: StaticGraph, motif: Motif, role: str | None = None
) -> Counter[int]:
    """Number of static embeddings each graph node lies on

    :param role: when given, only count the node playing this motif node
    """
    counts: Counter[int] = Counter()
    if role is not None and role not in motif.nodes:
        raise UnknownRole(f"{role!r} is not a node of the motif")
    position = None if role is None else motif.nodes.index(role)

    def sink(embedding: Embedding) -> None:
        if position is None:
            counts.update(embedding)
        else:
            counts[embedding[position]] += 1

    static_match(graph, motif, sink)
    return counts
