"""Chronological edge-driven temporal subgraph matching

The search walks the globally time sorted edge list and assigns motif edges
in rank order, so every partial match is already chronologically valid and
only edges inside the window opened by the first matched edge are visited.
"""

from __future__ import annotations

import enum
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from pydantic import BaseModel, Field

from chronomatch.graph.temporal import (
    EdgeConstraint,
    SearchView,
    TemporalGraph,
    candidate_edges,
)
from chronomatch.motifs.motif import Motif
from chronomatch.utils.types import Duration

logger = logging.getLogger(__name__)

UNASSIGNED = -1


class UnknownRole(ValueError):
    """Raised when a participation role is not a node of the motif"""


class MatchMode(enum.StrEnum):
    enumerate = "enumerate"
    """Deliver every match to a consumer"""
    count = "count"
    """Count matches without materializing them"""
    participation = "participation"
    """Count the matches each graph node lies on"""


class MatchQuery(BaseModel, frozen=True):
    """A temporal motif query"""

    motif: Motif
    delta: int | float = Field(
        default=math.inf, ge=0, description="window length, inf for no window"
    )
    limit: int | None = Field(
        default=None, ge=1, description="stop after this many matches"
    )
    mode: MatchMode = MatchMode.enumerate
    attributes: bool = Field(
        default=False, description="match node and edge integer labels"
    )
    role: str | None = Field(
        default=None, description="motif node counted in participation mode"
    )


@dataclass(frozen=True, slots=True)
class Match:
    """A temporal match

    ``edges[r]`` is the graph edge matched to the motif edge of rank ``r + 1``
    and ``node_map[i]`` the graph node matched to motif node ``i``.
    """

    edges: tuple[int, ...]
    node_map: tuple[int, ...]
    t_start: int
    t_end: int

    @property
    def duration(self) -> int:
        return self.t_end - self.t_start

    def labelled(self, graph: TemporalGraph, motif: Motif) -> dict[str, Any]:
        """Map from motif node label to graph node label"""
        return {
            label: graph.labels[node] for label, node in zip(motif.nodes, self.node_map)
        }


@dataclass(slots=True)
class MatchSummary:
    count: int = 0
    """Number of matches found"""
    edges_scanned: int = 0
    """Number of candidate edges examined"""
    truncated: bool = False
    """True when the search stopped at the query limit"""


@dataclass(slots=True)
class MatchState:
    """Bookkeeping of a search

    ``map_gm`` and ``map_mg`` are the partial node mappings between graph and
    motif, ``edge_count`` the number of stacked edges touching each graph node,
    ``stack`` the matched graph edges and ``t_prime`` the latest admissible
    timestamp.
    """

    map_gm: list[int]
    map_mg: list[int]
    edge_count: list[int]
    stack: list[int] = field(default_factory=list)
    t_prime: Duration = math.inf
    e_m: int = 0
    e_g: int = 0
    scanned: int = 0

    @classmethod
    def create(cls, graph_nodes: int, motif_nodes: int) -> MatchState:
        return cls(
            map_gm=[UNASSIGNED] * graph_nodes,
            map_mg=[UNASSIGNED] * motif_nodes,
            edge_count=[0] * graph_nodes,
        )

    def is_reset(self) -> bool:
        """True when no node is mapped and no edge is stacked"""
        return (
            not self.stack
            and self.e_m == 0
            and self.t_prime == math.inf
            and all(n == UNASSIGNED for n in self.map_gm)
            and all(n == UNASSIGNED for n in self.map_mg)
            and not any(self.edge_count)
        )

    def push(self, view: SearchView, motif: Motif, edge: int, delta: Duration) -> None:
        u_m, v_m = motif.edges[self.e_m]
        u_g = view.src[edge]
        v_g = view.dst[edge]
        self.map_gm[u_g] = u_m
        self.map_gm[v_g] = v_m
        self.map_mg[u_m] = u_g
        self.map_mg[v_m] = v_g
        self.edge_count[u_g] += 1
        self.edge_count[v_g] += 1
        if not self.stack:
            self.t_prime = view.time[edge] + delta
        self.stack.append(edge)
        self.e_m += 1

    def pop(self, view: SearchView) -> None:
        edge = self.stack.pop()
        self.e_g = edge + 1
        if not self.stack:
            self.t_prime = math.inf
        # endpoints are recovered from the popped edge
        for node in (view.src[edge], view.dst[edge]):
            self.edge_count[node] -= 1
        for node in (view.src[edge], view.dst[edge]):
            if self.edge_count[node] == 0 and self.map_gm[node] != UNASSIGNED:
                self.map_mg[self.map_gm[node]] = UNASSIGNED
                self.map_gm[node] = UNASSIGNED
        self.e_m -= 1

    def unwind(self, view: SearchView) -> None:
        while self.stack:
            self.pop(view)
        self.e_g = 0

    def match(self, view: SearchView, motif: Motif, edge: int) -> Match:
        """The match made of the stacked edges and the final ``edge``"""
        edges = (*self.stack, edge)
        node_map = list(self.map_mg)
        u_m, v_m = motif.edges[self.e_m]
        node_map[u_m] = view.src[edge]
        node_map[v_m] = view.dst[edge]
        return Match(
            edges=edges,
            node_map=tuple(node_map),
            t_start=view.time[edges[0]],
            t_end=view.time[edge],
        )


MatchSink = Callable[[Match], Any]


def find_next_match(
    graph: TemporalGraph,
    motif: Motif,
    state: MatchState,
    t_prime: Duration | None = None,
    *,
    attributes: bool = False,
) -> int | None:
    """Smallest edge index, at or after ``state.e_g``, matching the motif edge
    ``state.e_m``

    Candidates are narrowed by the nodes already mapped: edges between the two
    mapped nodes, edges leaving the mapped source or entering the mapped
    destination, all edges otherwise. Unmapped endpoints must be free graph
    nodes.

    :param graph: the temporal graph
    :param motif: the motif
    :param state: the search state
    :param t_prime: latest admissible timestamp, defaults to ``state.t_prime``
    :param attributes: check node and edge integer labels
    :return: the edge index or ``None`` when there is no admissible edge
    """
    view = graph.view
    u_m, v_m = motif.edges[state.e_m]
    u_g = state.map_mg[u_m]
    v_g = state.map_mg[v_m]
    if u_g >= 0 and v_g >= 0:
        constraint = EdgeConstraint.pair(u_g, v_g)
    elif u_g >= 0:
        constraint = EdgeConstraint.from_node(u_g)
    elif v_g >= 0:
        constraint = EdgeConstraint.into(v_g)
    else:
        constraint = EdgeConstraint.unconstrained()
    deadline = state.t_prime if t_prime is None else t_prime
    check = _attribute_check(view, motif, state.e_m) if attributes else None
    loop = u_m == v_m
    src = view.src
    dst = view.dst
    map_gm = state.map_gm
    for edge in candidate_edges(graph, constraint, state.e_g, deadline):
        state.scanned += 1
        s = src[edge]
        d = dst[edge]
        if (s == d) != loop:
            continue
        if not (s == u_g or (u_g < 0 and map_gm[s] < 0)):
            continue
        if not (d == v_g or (v_g < 0 and map_gm[d] < 0)):
            continue
        if check is not None and not check(edge, s, d):
            continue
        return edge
    return None


def temporal_match(
    graph: TemporalGraph,
    query: MatchQuery,
    sink: MatchSink | None = None,
    *,
    state: MatchState | None = None,
) -> MatchSummary:
    """Find all temporal matches of a motif

    Matches are delivered to ``sink`` in lexicographic order of their edge
    indices, each exactly once. When no sink is given matches are only counted.

    :param graph: the temporal graph
    :param query: the query
    :param sink: consumer of :class:`Match`
    :param state: optional search state, it must be reset and is reset on return
    """
    motif = query.motif
    summary = MatchSummary()
    if state is None:
        state = MatchState.create(graph.num_nodes, motif.num_nodes)
    num_edges = graph.num_edges
    if not motif.num_edges or not num_edges:
        return summary
    view = graph.view
    last = motif.num_edges - 1
    state.e_g = 0
    state.scanned = 0
    while True:
        found = find_next_match(graph, motif, state, attributes=query.attributes)
        e_g = num_edges if found is None else found
        if found is not None:
            if state.e_m == last:
                summary.count += 1
                if sink is not None:
                    sink(state.match(view, motif, found))
                if query.limit is not None and summary.count >= query.limit:
                    summary.truncated = True
                    state.unwind(view)
                    break
            else:
                state.push(view, motif, found, query.delta)
        state.e_g = e_g + 1
        if not _backtrack(state, view, num_edges):
            break
    state.e_g = 0
    summary.edges_scanned = state.scanned
    logger.debug(
        "temporal match %s delta=%s: %d matches, %d edges scanned",
        motif.describe(),
        query.delta,
        summary.count,
        summary.edges_scanned,
    )
    return summary


def count_matches(graph: TemporalGraph, query: MatchQuery) -> int:
    """Number of temporal matches, no match is materialized"""
    return temporal_match(graph, query).count


def node_participation(
    graph: TemporalGraph, query: MatchQuery, role: str | None = None
) -> Counter[int]:
    """Number of matches each graph node lies on

    :param role: when given, only count the node playing this motif node
    """
    counts: Counter[int] = Counter()
    role = role if role is not None else query.role
    temporal_match(graph, query, participation_sink(query.motif, counts, role))
    return counts


def participation_sink(
    motif: Motif, counts: Counter[int], role: str | None = None
) -> MatchSink:
    """A match consumer adding the nodes of each match to ``counts``"""
    if role is None:
        return lambda match: counts.update(match.node_map)
    if role not in motif.nodes:
        raise UnknownRole(f"{role!r} is not a node of the motif")
    position = motif.nodes.index(role)

    def sink(match: Match) -> None:
        counts[match.node_map[position]] += 1

    return sink


@dataclass
class QueryResult:
    summary: MatchSummary
    matches: list[Match] = field(default_factory=list)
    participation: Counter[int] = field(default_factory=Counter)


def execute(graph: TemporalGraph, query: MatchQuery) -> QueryResult:
    """Run a query according to its :attr:`MatchQuery.mode`"""
    result = QueryResult(summary=MatchSummary())
    sink: MatchSink | None
    match query.mode:
        case MatchMode.count:
            sink = None
        case MatchMode.participation:
            sink = participation_sink(query.motif, result.participation, query.role)
        case _:
            sink = result.matches.append
    result.summary = temporal_match(graph, query, sink)
    return result


def _backtrack(state: MatchState, view: SearchView, num_edges: int) -> bool:
    """Pop stacked edges until the scan index is an edge inside the window

    Returns ``False`` when the stack is exhausted and the search is over.
    """
    times = view.time
    while state.e_g >= num_edges or times[state.e_g] > state.t_prime:
        if not state.stack:
            return False
        state.pop(view)
    return True


def _attribute_check(
    view: SearchView, motif: Motif, position: int
) -> Callable[[int, int, int], bool] | None:
    u_m, v_m = motif.edges[position]
    edge_attr = motif.edge_attr(position)
    u_attr = motif.node_attr(u_m)
    v_attr = motif.node_attr(v_m)
    if edge_attr is None and u_attr is None and v_attr is None:
        return None
    edge_attrs = view.edge_attrs
    node_attrs = view.node_attrs

    def check(edge: int, src: int, dst: int) -> bool:
        if edge_attr is not None and (
            edge_attrs is None or edge_attrs[edge] != edge_attr
        ):
            return False
        for attr, node in ((u_attr, src), (v_attr, dst)):
            if attr is not None and (node_attrs is None or node_attrs[node] != attr):
                return False
        return True

    return check
