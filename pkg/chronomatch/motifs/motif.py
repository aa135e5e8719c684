from __future__ import annotations

import re
from typing import Self, Sequence

from pydantic import BaseModel, model_validator

COMMENT = "#"
LINE_SEPARATOR = re.compile(r"\n|\s/\s")


class MotifParseError(ValueError):
    """Raised when a motif definition is invalid"""


class Motif(BaseModel, frozen=True):
    """A temporal query graph

    Edges are stored in chronological order, the edge at position ``r`` has
    rank ``r + 1``. A motif carries no time information, the matching window
    is a parameter of the query.
    """

    nodes: tuple[str, ...]
    """Node labels, the position of a label is the motif node id"""
    edges: tuple[tuple[int, int], ...]
    """``(src, dst)`` node ids in rank order"""
    node_attrs: tuple[int | None, ...] = ()
    """Optional integer label of each node, empty when unused"""
    edge_attrs: tuple[int | None, ...] = ()
    """Optional integer label of each edge, empty when unused"""

    @model_validator(mode="after")
    def _check(self) -> Self:
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"duplicate node labels in {self.nodes}")
        n = len(self.nodes)
        used: set[int] = set()
        for rank, (src, dst) in enumerate(self.edges, start=1):
            if not (0 <= src < n and 0 <= dst < n):
                raise ValueError(f"edge at rank {rank} references an unknown node")
            used.update((src, dst))
        unused = [self.nodes[i] for i in range(n) if i not in used]
        # an edgeless motif is only used to check pure injectivity
        if unused and self.edges:
            raise ValueError(f"nodes {unused} are not part of any edge")
        if self.node_attrs and len(self.node_attrs) != n:
            raise ValueError("node attributes must be given for every node")
        if self.edge_attrs and len(self.edge_attrs) != len(self.edges):
            raise ValueError("edge attributes must be given for every edge")
        return self

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def has_attributes(self) -> bool:
        return any(a is not None for a in (*self.node_attrs, *self.edge_attrs))

    def node(self, label: str) -> int:
        """Motif node id of a label"""
        try:
            return self.nodes.index(label)
        except ValueError:
            raise MotifParseError(f"unknown motif node {label!r}") from None

    def node_attr(self, node: int) -> int | None:
        return self.node_attrs[node] if self.node_attrs else None

    def edge_attr(self, position: int) -> int | None:
        return self.edge_attrs[position] if self.edge_attrs else None

    def static_edges(self) -> set[tuple[int, int]]:
        """Distinct ``(src, dst)`` pairs, ranks and multiplicities removed"""
        return set(self.edges)

    def describe(self) -> str:
        return ", ".join(
            f"{self.nodes[s]}→{self.nodes[d]}({rank})"
            for rank, (s, d) in enumerate(self.edges, start=1)
        )


def make_motif(
    edges: Sequence[tuple[str, str]],
    *,
    node_attrs: dict[str, int] | None = None,
    edge_attrs: Sequence[int | None] | None = None,
) -> Motif:
    """Create a motif from labelled edges given in rank order

    Nodes are numbered by first appearance.
    """
    nodes: dict[str, int] = {}
    for src, dst in edges:
        nodes.setdefault(src, len(nodes))
        nodes.setdefault(dst, len(nodes))
    return Motif(
        nodes=tuple(nodes),
        edges=tuple((nodes[s], nodes[d]) for s, d in edges),
        node_attrs=_compact([(node_attrs or {}).get(n) for n in nodes]),
        edge_attrs=_compact(list(edge_attrs or ())),
    )


def parse_motif(text: str) -> Motif:
    """Parse a motif definition

    One edge per line, ``<src> <dst> <rank> [edge_attr]``, optional
    ``node <label> [attr]`` lines and ``#`` comments. A `` / `` separator can be
    used in place of new lines.
    """
    declared: dict[str, int | None] = {}
    ranked: dict[int, tuple[str, str, int | None]] = {}
    for number, raw in enumerate(LINE_SEPARATOR.split(text), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "node":
            if len(fields) not in (2, 3):
                raise MotifParseError(f"line {number}: expected 'node <label> [attr]'")
            if fields[1] in declared:
                raise MotifParseError(f"line {number}: node {fields[1]} declared twice")
            declared[fields[1]] = _int(fields[2], number) if len(fields) == 3 else None
            continue
        if len(fields) not in (3, 4):
            raise MotifParseError(
                f"line {number}: expected '<src> <dst> <rank> [attr]', got {line!r}"
            )
        rank = _int(fields[2], number)
        if rank in ranked:
            raise MotifParseError(f"line {number}: duplicate rank {rank}")
        attr = _int(fields[3], number) if len(fields) == 4 else None
        ranked[rank] = (fields[0], fields[1], attr)
    if not ranked:
        raise MotifParseError("motif has no edges")
    if missing := sorted(set(range(1, len(ranked) + 1)) - set(ranked)):
        raise MotifParseError(f"rank {missing[0]} missing")
    ordered = [ranked[rank] for rank in range(1, len(ranked) + 1)]
    nodes = dict.fromkeys(declared)
    for src, dst, _ in ordered:
        for label in (src, dst):
            if declared and label not in declared:
                raise MotifParseError(f"unknown node reference {label!r}")
            nodes.setdefault(label)
    try:
        return Motif(
            nodes=tuple(nodes),
            edges=tuple((_index(nodes, s), _index(nodes, d)) for s, d, _ in ordered),
            node_attrs=_compact([declared.get(n) for n in nodes]),
            edge_attrs=_compact([attr for _, _, attr in ordered]),
        )
    except ValueError as e:
        raise MotifParseError(str(e)) from e


def render_motif(motif: Motif) -> str:
    """Render a motif in the text format read by :func:`parse_motif`"""
    lines = []
    if motif.node_attrs or motif.nodes != _appearance_order(motif):
        for node, label in enumerate(motif.nodes):
            attr = motif.node_attr(node)
            lines.append(f"node {label}" if attr is None else f"node {label} {attr}")
    for position, (src, dst) in enumerate(motif.edges):
        line = f"{motif.nodes[src]} {motif.nodes[dst]} {position + 1}"
        if (attr := motif.edge_attr(position)) is not None:
            line = f"{line} {attr}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def validate_motif(motif: Motif) -> list[str]:
    """Warnings about motifs which degrade search performance

    An edge of rank greater than one sharing no node with the earlier edges
    cannot be narrowed by the node mapping, all graph edges are candidates.
    """
    warnings = []
    seen: set[int] = set()
    for rank, (src, dst) in enumerate(motif.edges, start=1):
        if rank > 1 and src not in seen and dst not in seen:
            warnings.append(
                f"rank {rank} ({motif.nodes[src]}→{motif.nodes[dst]}) shares no "
                "node with earlier edges, every graph edge is a candidate"
            )
        seen.update((src, dst))
    return warnings


def reorder_motif(motif: Motif, ranks: Sequence[int]) -> Motif:
    """The same motif with a different chronological order

    :param ranks: new rank (1-based) of each edge of ``motif``, in its current
        rank order
    """
    if sorted(ranks) != list(range(1, motif.num_edges + 1)):
        raise MotifParseError(f"ranks {list(ranks)} are not a permutation")
    positions = sorted(range(motif.num_edges), key=lambda p: ranks[p])
    edges = [
        (motif.nodes[motif.edges[p][0]], motif.nodes[motif.edges[p][1]])
        for p in positions
    ]
    return make_motif(
        edges,
        node_attrs={
            label: attr
            for label, attr in zip(motif.nodes, motif.node_attrs)
            if attr is not None
        },
        edge_attrs=[motif.edge_attr(p) for p in positions],
    )


def _appearance_order(motif: Motif) -> tuple[str, ...]:
    order: dict[str, None] = {}
    for src, dst in motif.edges:
        order.setdefault(motif.nodes[src])
        order.setdefault(motif.nodes[dst])
    return tuple(order)


def _compact(attrs: list[int | None]) -> tuple[int | None, ...]:
    return tuple(attrs) if any(a is not None for a in attrs) else ()


def _index(nodes: dict[str, None], label: str) -> int:
    return list(nodes).index(label)


def _int(value: str, line: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise MotifParseError(f"line {line}: {value!r} is not an integer") from None
