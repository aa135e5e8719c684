from __future__ import annotations

from functools import cached_property
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from chronomatch.utils.types import IntArray

from .temporal import TemporalGraph


class StaticGraph(BaseModel):
    """Directed graph obtained by merging parallel temporal edges

    Node ids are the same as the :class:`.TemporalGraph` it was merged from.
    Edges are unique ``(src, dst)`` pairs sorted by source and destination.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    labels: tuple[Any, ...] = Field(description="node labels indexed by node id")
    src: IntArray = Field(description="source node of each static edge")
    dst: IntArray = Field(description="destination node of each static edge")

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.src)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(zip(self.src.tolist(), self.dst.tolist()))

    @cached_property
    def successors(self) -> list[tuple[int, ...]]:
        """Ascending successors of each node"""
        return _adjacency(self.src, self.dst, self.num_nodes)

    @cached_property
    def predecessors(self) -> list[tuple[int, ...]]:
        """Ascending predecessors of each node"""
        return _adjacency(self.dst, self.src, self.num_nodes)

    def has_edge(self, src: int, dst: int) -> bool:
        return (src, dst) in self.edge_set

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist()))


def merge_parallel_edges(graph: TemporalGraph) -> StaticGraph:
    """Collapse parallel temporal edges into a :class:`StaticGraph`

    There is one static edge for each ordered pair of nodes connected by at
    least one temporal edge.
    """
    width = max(graph.num_nodes, 1)
    keys = np.unique(graph.src * width + graph.dst)
    src = (keys // width).astype(np.int64)
    dst = (keys % width).astype(np.int64)
    src.setflags(write=False)
    dst.setflags(write=False)
    return StaticGraph(labels=graph.labels, src=src, dst=dst)


def _adjacency(a: IntArray, b: IntArray, n: int) -> list[tuple[int, ...]]:
    order = np.lexsort((b, a))
    counts = np.bincount(a, minlength=n) if len(a) else np.zeros(n, dtype=np.int64)
    groups = np.split(b[order], np.cumsum(counts)[:-1]) if n else []
    return [tuple(group.tolist()) for group in groups]
