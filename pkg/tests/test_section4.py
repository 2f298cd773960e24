"""Tests for the order-1323 example."""

import pytest

from src.group_core.primes import PiSet
from src.verification.section4 import build_section4_group, section4_report


@pytest.fixture(scope="module")
def structure():
    return build_section4_group()


@pytest.fixture(scope="module")
def report(structure):
    return section4_report(PiSet.of([3]), structure)


@pytest.mark.integration
class TestSection4Structure:
    def test_subgroup_orders(self, structure):
        assert structure.group.order == 1323
        assert structure.subgroup_orders() == {
            "V": 49, "V1": 7, "V2": 7, "E": 27, "Z": 3, "M1": 9, "M2": 9, "X": 147, "M1V": 441, "M2V": 441,
        }

    def test_series(self, structure):
        series = structure.series(PiSet.of([3]))
        assert series["N"].orders == (1, 49, 1323)
        assert series["N1"].orders == (1, 49, 441, 1323)
        assert series["N2"].orders == (1, 49, 441, 1323)
        assert series["N1"] != series["N2"]
        assert series["N1"].kinds == ("pi'", "pi", "pi")


@pytest.mark.slow
@pytest.mark.integration
class TestSection4Report:
    def test_every_claim_holds(self, report):
        failed = [c.claim for c in report.claims if not c.passed]
        assert failed == []
        assert report.passed

    def test_counts(self, report):
        assert report.group_order == 1323
        assert report.degree == 58
        assert report.class_count == 59
        assert report.degree_histogram == {1: 9, 3: 38, 9: 12}
        assert report.phi_degree == 3
        assert len(report.lifts) == 13
        assert report.lift_count == 13

    def test_families(self, report):
        m1, m2 = set(report.families["M1"]), set(report.families["M2"])
        assert len(m1) == len(m2) == 7
        assert m1 & m2 == {report.chi}
        assert sorted(m1 | m2) == report.lifts
        assert len(report.families["B"]) == 12

    def test_pairs(self, report):
        assert report.pairs["N"].subgroup_order == 1323
        assert report.pairs["N1"].subgroup_order == 441
        assert report.pairs["N2"].subgroup_order == 441
        assert report.pairs["N1"].degree == 1

    def test_timing_off_by_default(self, report):
        assert report.seconds is None
