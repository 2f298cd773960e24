"""Tests for the property suite and corpus runs."""

import pytest

from src.config import get_settings
from src.group_core.builtins import builtin_group
from src.group_core.primes import PiSet
from src.models.reports import CheckRecorder, PropertyTally, merge_tallies
from src.verification.corpus import (
    ABELIAN,
    DEFAULT_CORPUS,
    aggregate,
    applicable_pi_sets,
    corpus_entries,
    run_corpus,
)
from src.verification.properties import run_property_suite


@pytest.mark.unit
class TestCheckRecorder:
    def test_tallies_and_anomalies(self):
        recorder = CheckRecorder({"group": "G"})
        recorder.record("a", True)
        recorder.record("a", False, "broken", {"row": 1})
        recorder.record("b", True)
        assert [(t.name, t.passed, t.failed) for t in recorder.tallies] == [("a", 1, 1), ("b", 1, 0)]
        assert len(recorder.anomalies) == 1
        assert recorder.anomalies[0].witness == {"group": "G", "row": 1}
        assert recorder.anomalies[0].message == "broken"

    def test_merge(self):
        merged = merge_tallies([
            [PropertyTally(name="a", passed=2)],
            [PropertyTally(name="a", failed=1), PropertyTally(name="b", passed=1)],
        ])
        assert [(t.name, t.passed, t.failed) for t in merged] == [("a", 2, 1), ("b", 1, 0)]


@pytest.mark.unit
class TestCorpusEntries:
    def test_applicable_pi_sets(self):
        sets = applicable_pi_sets(12)
        assert [sorted(p.primes) for p in sets] == [[2], [3], [2, 3]]
        assert applicable_pi_sets(1) == []

    def test_default_corpus(self):
        entries = corpus_entries()
        assert entries[-1].name == "section4"
        assert entries[-1].example_series
        assert {e.name for e in entries} == set(DEFAULT_CORPUS)

    def test_pi_override(self):
        entries = corpus_entries(["s3", "section4"], PiSet.of([3]))
        assert [(e.name, str(e.pi), e.example_series) for e in entries] == [
            ("s3", "{3}", False),
            ("section4", "{3}", False),
        ]


@pytest.mark.integration
class TestPropertySuite:
    @pytest.mark.parametrize("name,primes", [("s3", [3]), ("s3", [2]), ("a4", [2]), ("q8", [2]), ("c7:c3", [3])])
    def test_no_anomalies(self, name, primes):
        G = builtin_group(name)
        report = run_property_suite(G, PiSet.of(primes))
        assert report.anomalies == []
        assert report.order == G.order
        names = {t.name for t in report.tallies}
        assert {"table.sum_of_squares", "ipi.count", "main1.verdict", "main2.holds"} <= names

    def test_deterministic(self, s3, pi3):
        first = run_property_suite(s3, pi3)
        second = run_property_suite(builtin_group("s3"), pi3)
        assert first.model_dump() == second.model_dump()
        assert first.seconds is None

    def test_timing(self, s3, pi3):
        get_settings().verification.include_timing = True
        assert run_property_suite(s3, pi3).seconds is not None

    def test_aggregate(self, s3, pi3, pi2):
        reports = [run_property_suite(s3, pi3), run_property_suite(s3, pi2)]
        total = aggregate(reports)
        assert total.ok
        assert len(total.entries) == 2
        assert sum(t.passed for t in total.tallies) == sum(t.passed for r in reports for t in r.tallies)


@pytest.mark.integration
class TestRunCorpus:
    def test_abelian_corpus(self):
        report = run_corpus(list(ABELIAN))
        assert report.ok
        assert [e.group for e in report.entries][:1] == ["C2"]
        assert report.seconds is None

    def test_parallelism_does_not_change_the_report(self):
        serial = run_corpus(["s3", "a4"], parallelism=1)
        parallel = run_corpus(["s3", "a4"], parallelism=4)
        assert serial.model_dump() == parallel.model_dump()

    @pytest.mark.slow
    def test_default_corpus(self):
        report = run_corpus()
        assert report.anomaly_count == 0
