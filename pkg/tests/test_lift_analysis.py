"""Tests for N-pi-lifts, inductive pairs and the lift-family reports."""

import pytest

from src.char_table.table import character_table
from src.group_core.builtins import builtin_group
from src.group_core.permutation import parse_cycles
from src.group_core.primes import PiSet
from src.group_core.series import enumerate_normal_pi_series
from src.lift_analysis.inductive import is_inductive_pair, is_inductive_source, source_stabilizer
from src.lift_analysis.lifts import is_chain_pi_lift, is_pi_lift, nchain_lift_count
from src.lift_analysis.main1 import check_main1
from src.lift_analysis.main2 import main2_lift_family, pi_prime_linear_characters
from src.pi_theory.partial import ipi
from src.towers.pairs import CharacterPair
from src.utils.errors import NotACharacterError


@pytest.fixture
def s3_series(s3, pi3):
    return enumerate_normal_pi_series(s3, pi3)[0]


@pytest.fixture
def a3(s3):
    return s3.subgroup_generated([parse_cycles("(1 2 3)", 3)], name="A3")


@pytest.mark.unit
class TestLifts:
    def test_pi_lifts(self, s3, pi3, pi2):
        rows = character_table(s3).rows
        assert all(is_pi_lift(chi, pi3) for chi in rows)
        assert [is_pi_lift(chi, pi2) for chi in rows] == [True, True, False]

    def test_chain_lifts(self, s3, s3_series):
        for chi in character_table(s3).rows:
            check = is_chain_pi_lift(chi, s3_series)
            assert check.holds
            assert check.failing_levels == ()

    def test_chain_lift_failure(self, s4, pi2):
        # the degree-2 character of S4 restricts to the 2-elements as 1 + sign
        S = next(S for S in enumerate_normal_pi_series(s4, pi2) if S.orders == (1, 4, 12, 24))
        chi = next(c for c in character_table(s4).rows if c.degree_int == 2)
        check = is_chain_pi_lift(chi, S)
        assert not is_pi_lift(chi, pi2)
        assert not check.holds
        assert check.failing_levels == (3,)
        assert check.failures[3] == (chi.index,)

    def test_lift_count(self, s3, pi3, s3_series):
        ptable = ipi(s3, pi3)
        assert nchain_lift_count(ptable.members[0], s3_series) == 2
        assert nchain_lift_count(ptable.members[1], s3_series) == 1


@pytest.mark.unit
class TestInductive:
    def test_induced_pair(self, s3, a3, s3_series):
        pair = CharacterPair(a3, character_table(a3).rows[1])
        check = is_inductive_pair(pair, s3_series)
        assert check.holds
        summary = check.summary()
        assert summary.inductive
        assert [L.intersection_order for L in summary.levels] == [1, 3, 3]
        assert summary.levels[-1].induced == 2

    def test_non_homogeneous_pair(self, s3, s3_series):
        pair = CharacterPair(s3, character_table(s3).rows[2])
        check = is_inductive_pair(pair, s3_series)
        assert not check.holds
        assert check.failing_level == 1
        assert check.reason == "restriction is not homogeneous"

    def test_sources(self, s3, a3):
        lam = character_table(a3).rows[1]
        assert source_stabilizer(a3, lam, s3).order == 3
        assert is_inductive_source(a3, lam, s3)
        assert is_inductive_source(a3, character_table(a3).rows[0], s3)


@pytest.mark.unit
class TestMain1:
    @pytest.mark.parametrize("row", [0, 1, 2])
    def test_s3_rows_agree(self, s3, s3_series, row):
        report = check_main1(character_table(s3).rows[row], s3_series)
        assert report.verdict
        assert report.condition1 and report.condition2 and report.condition3
        assert report.series == "1<3<6"

    def test_s3_factorization_fields(self, s3, s3_series):
        report = check_main1(character_table(s3).rows[2], s3_series)
        assert report.pair.subgroup_order == 3
        assert report.beta_linear
        assert report.alpha_inductive.inductive

    @pytest.mark.parametrize("name", ["a4", "s4", "d8"])
    def test_conditions_agree(self, name):
        G = builtin_group(name)
        pi = PiSet.of([2])
        for S in enumerate_normal_pi_series(G, pi):
            for chi in character_table(G).rows:
                assert check_main1(chi, S).verdict


@pytest.mark.unit
class TestMain2:
    def test_s3_trivial(self, s3, pi3, s3_series):
        report = main2_lift_family(ipi(s3, pi3).members[0], s3_series)
        assert report.chi == 0
        assert report.bound == 2
        assert report.index_bound == 2
        assert report.count == 2
        assert sorted(report.images) == [0, 1]
        assert report.holds

    def test_s3_degree_two(self, s3, pi3, s3_series):
        report = main2_lift_family(ipi(s3, pi3).members[1], s3_series)
        assert report.chi == 2
        assert report.bound == 1
        assert report.images == [2]
        assert report.holds

    def test_a4(self, a4, pi2):
        S = enumerate_normal_pi_series(a4, pi2)[0]
        report = main2_lift_family(ipi(a4, pi2).members[0], S)
        assert report.bound == 3
        assert report.count == 3
        assert report.holds

    def test_pi_prime_linear(self, a4, pi2, pi3):
        assert len(pi_prime_linear_characters(a4, pi2)) == 3
        assert len(pi_prime_linear_characters(a4, pi3)) == 1

    def test_rejects_non_member(self, s3, pi3, s3_series):
        phi = ipi(s3, pi3).members[0] + ipi(s3, pi3).members[1]
        with pytest.raises(NotACharacterError):
            main2_lift_family(phi, s3_series)


@pytest.fixture
def s4():
    return builtin_group("s4")
