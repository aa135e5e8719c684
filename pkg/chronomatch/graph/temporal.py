from __future__ import annotations

import enum
import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping, NamedTuple, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from chronomatch.utils.types import Duration, IntArray, as_int_array


class GraphConstructionError(ValueError):
    """Raised when edge records cannot be turned into a :class:`TemporalGraph`"""


class TemporalEdge(NamedTuple):
    """A single timestamped edge of a :class:`TemporalGraph`"""

    src: int
    dst: int
    time: int
    index: int


class ConstraintKind(enum.Enum):
    """Structural constraint used to narrow candidate edges"""

    pair = enum.auto()
    """Edges from a given source to a given destination"""
    source = enum.auto()
    """Edges leaving a given node"""
    target = enum.auto()
    """Edges entering a given node"""
    any = enum.auto()
    """All edges"""


@dataclass(frozen=True, slots=True)
class EdgeConstraint:
    kind: ConstraintKind
    src: int = -1
    dst: int = -1

    @classmethod
    def pair(cls, src: int, dst: int) -> EdgeConstraint:
        return cls(ConstraintKind.pair, src, dst)

    @classmethod
    def from_node(cls, src: int) -> EdgeConstraint:
        return cls(ConstraintKind.source, src=src)

    @classmethod
    def into(cls, dst: int) -> EdgeConstraint:
        return cls(ConstraintKind.target, dst=dst)

    @classmethod
    def unconstrained(cls) -> EdgeConstraint:
        return cls(ConstraintKind.any)


@dataclass(slots=True)
class SearchView:
    """Plain python lists mirroring the graph arrays

    Element access on python lists is much faster than on numpy arrays,
    the matchers use this view in their inner loops.
    """

    src: list[int]
    dst: list[int]
    time: list[int]
    out_edges: list[list[int]]
    in_edges: list[list[int]]
    pair_edges: dict[tuple[int, int], list[int]]
    node_attrs: list[int] | None
    edge_attrs: list[int] | None


class TemporalGraph(BaseModel):
    """Immutable temporal multi-digraph

    Edges are kept in a single sequence sorted chronologically, ties are kept
    in ingestion order. Node ids are dense integers ``0..num_nodes-1`` and the
    original node labels are kept in :attr:`labels`.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    labels: tuple[Any, ...] = Field(description="node labels indexed by node id")
    src: IntArray = Field(description="source node of each edge")
    dst: IntArray = Field(description="destination node of each edge")
    time: IntArray = Field(description="timestamp of each edge, non-decreasing")
    out_offsets: IntArray
    out_order: IntArray
    in_offsets: IntArray
    in_order: IntArray
    pair_index: dict[tuple[int, int], IntArray]
    node_attrs: IntArray | None = Field(
        default=None, description="optional integer label of each node"
    )
    edge_attrs: IntArray | None = Field(
        default=None, description="optional integer label of each edge"
    )

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.time)

    @property
    def time_span(self) -> int:
        """Difference between the last and the first timestamp"""
        if not self.num_edges:
            return 0
        return int(self.time[-1] - self.time[0])

    @cached_property
    def node_ids(self) -> dict[Any, int]:
        """Map from node label to node id"""
        return {label: node for node, label in enumerate(self.labels)}

    @cached_property
    def view(self) -> SearchView:
        out_order = self.out_order.tolist()
        in_order = self.in_order.tolist()
        out_offsets = self.out_offsets.tolist()
        in_offsets = self.in_offsets.tolist()
        return SearchView(
            src=self.src.tolist(),
            dst=self.dst.tolist(),
            time=self.time.tolist(),
            out_edges=[
                out_order[out_offsets[n] : out_offsets[n + 1]]
                for n in range(self.num_nodes)
            ],
            in_edges=[
                in_order[in_offsets[n] : in_offsets[n + 1]]
                for n in range(self.num_nodes)
            ],
            pair_edges={key: value.tolist() for key, value in self.pair_index.items()},
            node_attrs=None if self.node_attrs is None else self.node_attrs.tolist(),
            edge_attrs=None if self.edge_attrs is None else self.edge_attrs.tolist(),
        )

    def node_id(self, label: Any) -> int | None:
        """Node id of a label, ``None`` when the label is not in the graph"""
        return self.node_ids.get(label)

    def label(self, node: int) -> Any:
        return self.labels[node]

    def edge(self, index: int) -> TemporalEdge:
        return TemporalEdge(
            int(self.src[index]), int(self.dst[index]), int(self.time[index]), index
        )

    def edges(self) -> Iterator[TemporalEdge]:
        view = self.view
        for index, (s, d, t) in enumerate(zip(view.src, view.dst, view.time)):
            yield TemporalEdge(s, d, t, index)

    def out_index(self, node: int) -> IntArray:
        """Ascending edge indices leaving ``node``"""
        return self.out_order[self.out_offsets[node] : self.out_offsets[node + 1]]

    def in_index(self, node: int) -> IntArray:
        """Ascending edge indices entering ``node``"""
        return self.in_order[self.in_offsets[node] : self.in_offsets[node + 1]]

    def pair_edges(self, src: int, dst: int) -> IntArray:
        """Ascending edge indices from ``src`` to ``dst``"""
        return self.pair_index.get((src, dst), EMPTY)

    def edge_triples(self) -> Iterator[tuple[Any, Any, int]]:
        """Edges as ``(src label, dst label, time)`` in chronological order"""
        for edge in self.edges():
            yield self.labels[edge.src], self.labels[edge.dst], edge.time


EMPTY: IntArray = np.zeros(0, dtype=np.int64)
EMPTY.setflags(write=False)


def build_graph(
    triples: Iterable[Sequence[Any]],
    *,
    node_attrs: Mapping[Any, int] | None = None,
    edge_attrs: Sequence[int] | None = None,
) -> TemporalGraph:
    """Build a :class:`TemporalGraph` from ``(src label, dst label, time)`` records

    Edges are stably sorted by time so that equal timestamps keep the input
    order. Labels are interned to dense ids in order of first appearance.

    :param triples: edge records
    :param node_attrs: optional integer label for nodes, keyed by node label
    :param edge_attrs: optional integer label for each record, in input order
    """
    ids: dict[Any, int] = {}
    src: list[int] = []
    dst: list[int] = []
    times: list[int] = []
    for position, record in enumerate(triples):
        try:
            size = len(record)
        except TypeError:
            raise GraphConstructionError(
                f"record {position} is not a sequence: {record!r}"
            ) from None
        if size != 3:
            raise GraphConstructionError(
                f"record {position} must have 3 fields (src, dst, time), "
                f"got {size}: {record!r}"
            )
        s, d, t = record
        if isinstance(t, bool) or not isinstance(t, (int, np.integer)):
            raise GraphConstructionError(
                f"record {position} has a non-integer time {t!r}: {record!r}"
            )
        src.append(ids.setdefault(s, len(ids)))
        dst.append(ids.setdefault(d, len(ids)))
        times.append(int(t))
    if edge_attrs is not None and len(edge_attrs) != len(times):
        raise GraphConstructionError(
            f"{len(edge_attrs)} edge attributes for {len(times)} edges"
        )
    order = np.argsort(as_int_array(times), kind="stable")
    labels = tuple(ids)
    nattrs = None
    if node_attrs is not None:
        nattrs = as_int_array([node_attrs.get(label, -1) for label in labels])
    eattrs = None
    if edge_attrs is not None:
        eattrs = as_int_array(edge_attrs)[order]
    return from_arrays(
        labels,
        as_int_array(src)[order],
        as_int_array(dst)[order],
        as_int_array(times)[order],
        node_attrs=nattrs,
        edge_attrs=eattrs,
    )


def from_arrays(
    labels: Sequence[Any],
    src: IntArray,
    dst: IntArray,
    time: IntArray,
    *,
    node_attrs: IntArray | None = None,
    edge_attrs: IntArray | None = None,
) -> TemporalGraph:
    """Build the indexes of a graph whose edges are already chronologically sorted"""
    n = len(labels)
    if len(time) > 1 and np.any(np.diff(time) < 0):
        raise GraphConstructionError("edges are not sorted by time")
    if len(src) and (src.max() >= n or dst.max() >= n or min(src.min(), dst.min()) < 0):
        raise GraphConstructionError("edge endpoints outside of the node range")
    out_offsets, out_order = _csr(src, n)
    in_offsets, in_order = _csr(dst, n)
    arrays = [src, dst, time, out_offsets, out_order, in_offsets, in_order]
    pair_index = _pair_index(src, dst, n)
    for array in (*arrays, *pair_index.values()):
        array.setflags(write=False)
    return TemporalGraph(
        labels=tuple(labels),
        src=src,
        dst=dst,
        time=time,
        out_offsets=out_offsets,
        out_order=out_order,
        in_offsets=in_offsets,
        in_order=in_order,
        pair_index=pair_index,
        node_attrs=node_attrs,
        edge_attrs=edge_attrs,
    )


def candidate_edges(
    graph: TemporalGraph,
    constraint: EdgeConstraint,
    min_index: int = 0,
    max_time: Duration = math.inf,
) -> Iterator[int]:
    """Ascending edge indices satisfying a structural constraint

    Only edges with index at least ``min_index`` and timestamp at most
    ``max_time`` are yielded. The start of the relevant index sequence is
    located by binary search.

    :param graph: the temporal graph
    :param constraint: the structural constraint
    :param min_index: smallest admissible edge index
    :param max_time: largest admissible timestamp
    """
    view = graph.view
    sequence = index_sequence(view, constraint, graph.num_edges)
    if isinstance(sequence, range):
        start = max(min_index, 0)
    else:
        start = bisect_left(sequence, min_index)
    times = view.time
    for position in range(start, len(sequence)):
        edge = sequence[position]
        if times[edge] > max_time:
            return
        yield edge


def index_sequence(
    view: SearchView, constraint: EdgeConstraint, num_edges: int
) -> Sequence[int]:
    """The ascending index sequence holding all edges matching ``constraint``"""
    match constraint.kind:
        case ConstraintKind.pair:
            return view.pair_edges.get((constraint.src, constraint.dst), ())
        case ConstraintKind.source:
            if 0 <= constraint.src < len(view.out_edges):
                return view.out_edges[constraint.src]
            return ()
        case ConstraintKind.target:
            if 0 <= constraint.dst < len(view.in_edges):
                return view.in_edges[constraint.dst]
            return ()
        case _:
            return range(num_edges)


def _csr(nodes: IntArray, n: int) -> tuple[IntArray, IntArray]:
    # stable sort keeps edge indices ascending within each node
    order = np.argsort(nodes, kind="stable").astype(np.int64)
    counts = np.bincount(nodes, minlength=n) if len(nodes) else np.zeros(n, int)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return offsets, order


def _pair_index(src: IntArray, dst: IntArray, n: int) -> dict[tuple[int, int], IntArray]:
    if not len(src):
        return {}
    keys = src * max(n, 1) + dst
    order = np.argsort(keys, kind="stable").astype(np.int64)
    unique, starts = np.unique(keys[order], return_index=True)
    groups = np.split(order, starts[1:])
    width = max(n, 1)
    return {
        (int(key // width), int(key % width)): group
        for key, group in zip(unique.tolist(), groups)
    }
