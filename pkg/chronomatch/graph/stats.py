from __future__ import annotations

import numpy as np
from pydantic import BaseModel, Field

from .static import merge_parallel_edges
from .temporal import TemporalGraph

SECONDS_PER_DAY = 86400


class GraphStats(BaseModel):
    """Summary statistics of a temporal graph"""

    nodes: int = Field(description="number of nodes")
    static_edges: int = Field(description="number of edges after merging parallels")
    edges: int = Field(description="number of temporal edges")
    time_span: int = Field(description="last minus first timestamp")
    self_loops: int = Field(description="number of temporal self-loops")
    tied_edges: int = Field(
        description="number of edges sharing their timestamp with the previous edge"
    )

    @property
    def time_span_days(self) -> float:
        return self.time_span / SECONDS_PER_DAY


def graph_stats(graph: TemporalGraph) -> GraphStats:
    return GraphStats(
        nodes=graph.num_nodes,
        static_edges=merge_parallel_edges(graph).num_edges,
        edges=graph.num_edges,
        time_span=graph.time_span,
        self_loops=int(np.count_nonzero(graph.src == graph.dst)),
        tied_edges=int(np.count_nonzero(np.diff(graph.time) == 0)),
    )
