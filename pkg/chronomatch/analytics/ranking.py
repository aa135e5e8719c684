"""Rank graph nodes by the number of motif matches they lie on

Ties use competition ranking: nodes with equal counts share the best rank and
the following rank is skipped, so counts ``5, 5, 1`` are ranked ``1, 1, 3``.
"""

from __future__ import annotations

from typing import Any, Mapping, Sequence

import polars as pl
from pydantic import BaseModel, Field

ABSENT = "absent"


class RankRow(BaseModel, frozen=True):
    node: Any = Field(description="node label")
    count: int = Field(ge=1, description="number of matches the node lies on")
    rank: int = Field(ge=1, description="competition rank, 1 is the highest")


class RankTable(BaseModel, frozen=True):
    """Nodes sorted by descending participation count"""

    rows: tuple[RankRow, ...] = ()
    target: Any = Field(default=None, description="node label looked up")
    target_rank: int | None = Field(
        default=None, description="rank of the target, None when absent"
    )

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def df(self) -> pl.DataFrame:
        """The table as a polars DataFrame with ``rank, node, count`` columns"""
        return pl.DataFrame(
            {
                "rank": [row.rank for row in self.rows],
                "node": [str(row.node) for row in self.rows],
                "count": [row.count for row in self.rows],
            },
            schema={"rank": pl.Int64, "node": pl.String, "count": pl.Int64},
        )

    def rank_of(self, node: Any) -> int | None:
        for row in self.rows:
            if row.node == node:
                return row.rank
        return None

    def target_report(self) -> str:
        rank = ABSENT if self.target_rank is None else str(self.target_rank)
        return f"target: {rank}"


def rank_nodes(
    participation: Mapping[int, int],
    *,
    labels: Sequence[Any] | None = None,
    target: Any = None,
) -> RankTable:
    """Build a :class:`RankTable` from participation counts

    Nodes with a zero count are left out. Rows with equal counts are listed in
    ascending node id.

    :param participation: number of matches of each node id
    :param labels: node labels indexed by node id, node ids are used when missing
    :param target: node label whose rank is reported, an unknown label is absent
    """
    nodes = list(participation)
    counts = [participation[node] for node in nodes]
    if any(count < 0 for count in counts):
        raise ValueError("participation counts must be non-negative")
    df = (
        pl.DataFrame(
            {"id": nodes, "count": counts},
            schema={"id": pl.Int64, "count": pl.Int64},
        )
        .filter(pl.col("count") > 0)
        .with_columns(
            pl.col("count")
            .rank(method="min", descending=True)
            .cast(pl.Int64)
            .alias("rank")
        )
        .sort(["rank", "id"])
    )
    rows = tuple(
        RankRow(
            node=node if labels is None else labels[node],
            count=count,
            rank=rank,
        )
        for node, count, rank in df.select("id", "count", "rank").iter_rows()
    )
    table = RankTable(rows=rows, target=target)
    if target is None:
        return table
    return table.model_copy(update={"target_rank": table.rank_of(target)})
