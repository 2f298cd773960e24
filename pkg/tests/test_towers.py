"""Tests for character towers, self-stabilizing pairs and B_pi(G : N)."""

import pytest

from src.char_table.table import character_table
from src.group_core.permutation import parse_cycles
from src.group_core.series import enumerate_normal_pi_series
from src.towers.bpi import bpi_chain, check_compatible_lift_set, lift_system_bpi
from src.towers.pairs import (
    CharacterPair,
    conjugate_pair,
    is_conjugate_into,
    pairs_conjugate,
    self_stabilizing_pair,
)
from src.towers.towers import character_towers, tower_stabilizer
from src.utils.errors import GroupMismatchError


@pytest.fixture
def s3_series(s3, pi3):
    return enumerate_normal_pi_series(s3, pi3)[0]


@pytest.fixture
def a3(s3):
    return s3.subgroup_generated([parse_cycles("(1 2 3)", 3)], name="A3")


@pytest.mark.unit
class TestTowers:
    def test_towers_of_degree_two(self, s3, s3_series):
        chi = character_table(s3).rows[2]
        towers = character_towers(chi, s3_series)
        assert [t.rows for t in towers] == [(0, 1, 2), (0, 2, 2)]
        assert towers[0].top is chi
        assert tower_stabilizer(towers[0]).order == 3

    def test_linear_characters_have_one_tower(self, s3, s3_series):
        for chi in character_table(s3).rows[:2]:
            towers = character_towers(chi, s3_series)
            assert len(towers) == 1
            assert tower_stabilizer(towers[0]).order == 6

    def test_wrong_group(self, a4, s3_series):
        with pytest.raises(GroupMismatchError):
            character_towers(character_table(a4).rows[0], s3_series)


@pytest.mark.unit
class TestSelfStabilizingPairs:
    def test_induced_character(self, s3, s3_series):
        chi = character_table(s3).rows[2]
        ssp = self_stabilizing_pair(chi, s3_series)
        assert ssp.subgroup.order == 3
        assert ssp.character.degree_int == 1
        assert ssp.towers_conjugate is True
        assert ssp.factorization is not None
        assert ssp.factorization.beta.index == 0
        assert [L.multiplicity for L in ssp.levels] == [1, 1, 1]

    def test_sign_character(self, s3, s3_series):
        chi = character_table(s3).rows[1]
        ssp = self_stabilizing_pair(chi, s3_series)
        assert ssp.subgroup is s3
        assert ssp.character is chi
        assert ssp.factorization.describe() == {"alpha": 0, "beta": 1, "gamma": 1}

    def test_describe(self, s3, s3_series):
        data = self_stabilizing_pair(character_table(s3).rows[2], s3_series).describe()
        assert data["chi"] == 2
        assert data["series"] == "1<3<6"
        assert data["pair"]["subgroup_order"] == 3
        assert len(data["towers"]) == 2

    def test_pair_conjugacy(self, s3, a3):
        rows = character_table(a3).rows
        p = CharacterPair(a3, rows[1])
        assert pairs_conjugate(p, CharacterPair(a3, rows[2]), s3)
        assert not pairs_conjugate(p, CharacterPair(a3, rows[0]), s3)
        assert pairs_conjugate(p, p, s3)

    def test_conjugate_pair_of_subgroup(self, s3):
        t = s3.subgroup_generated([parse_cycles("(1 2)", 3)])
        pair = CharacterPair(t, character_table(t).rows[1])
        g = s3.index_of(parse_cycles("(1 2 3)", 3))
        moved = conjugate_pair(pair, g)
        assert moved.subgroup != t
        assert moved.subgroup.order == 2
        assert moved.character.degree_int == 1
        assert pairs_conjugate(pair, moved, s3)

    def test_conjugate_into(self, s3, a3):
        t = s3.subgroup_generated([parse_cycles("(1 2)", 3)])
        assert is_conjugate_into(s3.trivial_subgroup(), a3, s3)
        assert not is_conjugate_into(t, a3, s3)


@pytest.mark.unit
class TestBpi:
    def test_s3(self, s3, pi3, s3_series):
        bpi = bpi_chain(s3, pi3, s3_series)
        assert bpi.rows == (0, 2)
        assert bpi.member_of == {0: 0, 2: 1}
        assert bpi.row_for_member(1) == 2
        assert [c.degree_int for c in bpi.characters()] == [1, 2]

    def test_a4(self, a4, pi2):
        for S in enumerate_normal_pi_series(a4, pi2):
            bpi = bpi_chain(a4, pi2, S)
            assert len(bpi.rows) == 2

    def test_lift_system_is_compatible(self, s3, pi3, s3_series):
        system = lift_system_bpi(s3, pi3, s3_series)
        assert len(system.levels) == 3
        recorder = check_compatible_lift_set(system)
        assert recorder.anomalies == []
        assert any(t.name == "lift_system.bijection" for t in recorder.tallies)
