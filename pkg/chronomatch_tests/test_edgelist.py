import io

import pytest

from chronomatch.data.edgelist import (
    Delimiter,
    EdgeListFormat,
    EdgeListParseError,
    detect_format,
    dumps_edge_list,
    load_dataset,
    parse_edge_list,
)
from chronomatch.graph.temporal import build_graph
from chronomatch_tests.utils import FIG1_EDGES, edge_list_text, fig1


def test_parse_whitespace() -> None:
    records = parse_edge_list("# comment\n% konect\n\n1 2 10\n2\t3  5\n")
    assert [(r.src, r.dst, r.time) for r in records] == [("1", "2", 10), ("2", "3", 5)]
    assert [r.line for r in records] == [4, 5]


def test_parse_konect_weight_ignored() -> None:
    records = parse_edge_list("1 2 1 100\n2 3 1 50\n")
    assert [r.time for r in records] == [100, 50]


def test_parse_time_column() -> None:
    records = parse_edge_list("1 2 7 100 x\n", EdgeListFormat(time_column=2))
    assert records[0].time == 7


def test_parse_csv_with_header() -> None:
    text = "src,dst,time\na, b ,3\nb,c,4\n"
    assert detect_format(text.splitlines()).delimiter is Delimiter.comma
    records = parse_edge_list(text)
    assert [(r.src, r.dst, r.time) for r in records] == [("a", "b", 3), ("b", "c", 4)]


def test_parse_bytes_and_streams() -> None:
    data = b"a b 1\nb c 2\n"
    assert len(parse_edge_list(data)) == 2
    assert len(parse_edge_list(io.BytesIO(data))) == 2
    assert len(parse_edge_list(io.StringIO(data.decode()))) == 2
    assert len(parse_edge_list(["a b 1", "b c 2"])) == 2


def test_parse_invalid_utf8() -> None:
    data = b"a b 1\n\xff\xfe c 2\n"
    for stream in (data, io.BytesIO(data)):
        with pytest.raises(EdgeListParseError, match="invalid utf-8") as exc:
            parse_edge_list(stream)
        assert exc.value.line == 2


def test_detect_csv_with_spaces() -> None:
    text = "a, b, 3\nb, c, 4\n"
    assert detect_format(text.splitlines()).delimiter is Delimiter.comma
    records = parse_edge_list(text)
    assert [(r.src, r.dst, r.time) for r in records] == [("a", "b", 3), ("b", "c", 4)]
    assert detect_format(["a b 3"]).delimiter is Delimiter.whitespace


def test_parse_empty() -> None:
    assert parse_edge_list("") == []
    assert parse_edge_list("# only comments\n") == []


def test_parse_errors() -> None:
    with pytest.raises(EdgeListParseError, match="line 2") as exc:
        parse_edge_list("a b 1\na b\n")
    assert exc.value.line == 2
    with pytest.raises(EdgeListParseError, match="non-numeric time") as exc:
        parse_edge_list("# header\na b 1\na b noon\n")
    assert exc.value.line == 3
    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_edge_list("a,b\n", EdgeListFormat(delimiter=Delimiter.comma))


def test_round_trip() -> None:
    g = fig1()
    text = dumps_edge_list(g)
    assert text.splitlines()[0] == "D E 1"
    records = parse_edge_list(text)
    g2 = build_graph((r.src, r.dst, r.time) for r in records)
    assert g2.labels == ("D", "E", "B", "C", "A", "F")
    assert list(g2.edge_triples()) == list(g.edge_triples())


def test_load_dataset(tmp_path) -> None:
    path = tmp_path / "fig1.txt"
    path.write_text(edge_list_text(FIG1_EDGES))
    g = load_dataset(path)
    assert g.num_edges == 9
    assert g.num_nodes == 6
    assert list(g.edge_triples()) == list(fig1().edge_triples())


def test_load_missing(tmp_path) -> None:
    with pytest.raises(OSError):
        load_dataset(tmp_path / "missing.txt")
