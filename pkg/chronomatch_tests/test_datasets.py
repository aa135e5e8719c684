"""Counts on the public SNAP temporal edge lists

Set ``CHRONOMATCH_DATASETS`` to the directory holding the uncompressed files.
"""

import pytest

from chronomatch.bench.harness import BenchConfig, run_bench
from chronomatch.cli.settings import datasets_directory
from chronomatch.data.edgelist import load_dataset
from chronomatch.graph.stats import graph_stats
from chronomatch.match.engine import MatchQuery, count_matches
from chronomatch.motifs.builtin import STANDARD_MOTIFS, builtin_motif

EMAIL_EU = datasets_directory() / "email-Eu-core-temporal.txt"
COLLEGE_MSG = datasets_directory() / "CollegeMsg.txt"
HOUR = 3600

pytestmark = pytest.mark.skipif(
    not EMAIL_EU.exists(), reason="Email-Eu dataset not found"
)


@pytest.fixture(scope="module")
def email_eu():
    return load_dataset(EMAIL_EU)


def test_email_eu_stats(email_eu) -> None:
    stats = graph_stats(email_eu)
    assert stats.nodes == 986
    assert stats.static_edges == 24_929
    assert stats.edges == 332_334


@pytest.mark.parametrize(
    "name, expected, digits",
    [
        ("M1", 258, 0),
        ("M2", 30_100, 2),
        ("M3", 493, 0),
        ("M4", 23, 0),
        ("M5", 4_710_000, 4),
        ("M6", 31_100, 2),
    ],
)
def test_email_eu_counts(email_eu, name: str, expected: int, digits: int) -> None:
    count = count_matches(email_eu, MatchQuery(motif=builtin_motif(name), delta=HOUR))
    assert round(count, -digits) == expected


def test_email_eu_temporal_faster_than_static(email_eu) -> None:
    motifs = {name: builtin_motif(name) for name in STANDARD_MOTIFS}
    config = BenchConfig(deltas=(HOUR,), time_cap=600, warmup=False)
    report = run_bench(email_eu, motifs, config, name="email-eu")
    faster = [row.motif for row in report.rows if (row.speedup or 0) > 1]
    assert len(faster) >= 4, faster


@pytest.mark.skipif(not COLLEGE_MSG.exists(), reason="CollegeMsg dataset not found")
def test_college_msg_m4() -> None:
    graph = load_dataset(COLLEGE_MSG)
    assert count_matches(graph, MatchQuery(motif=builtin_motif("M4"), delta=HOUR)) == 0
