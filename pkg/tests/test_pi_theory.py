"""Tests for pi-partial characters, I_pi and pi-special characters."""

import pytest

from src.char_table.table import character_table
from src.group_core.builtins import builtin_group
from src.group_core.permutation import parse_cycles
from src.group_core.primes import PiSet
from src.pi_theory.oracle import ipi_bruteforce
from src.pi_theory.partial import (
    decompose_partial,
    ipi,
    lifts_of,
    partial_from_values,
    pi_classes,
    restrict_partial,
    restrict_to_pi,
)
from src.pi_theory.rational import RationalBasis, as_fractions
from src.pi_theory.special import is_pi_factored, is_pi_special, pi_factorize, special_characters
from src.utils.errors import GroupMismatchError, NotACharacterError, NotPiSeparableError

SMALL = ["s3", "d8", "q8", "a4", "s4", "c7:c3", "sl23", "d10", "c6"]


def _prime_sets(order):
    primes = [p for p in (2, 3, 5, 7) if order % p == 0]
    sets = [PiSet.of([p]) for p in primes]
    if len(primes) > 1:
        sets.append(PiSet.of(primes))
    return sets


@pytest.mark.unit
class TestRationalBasis:
    def test_coordinates(self):
        basis = RationalBasis(2)
        assert basis.add(as_fractions([1, 1])) == 0
        assert basis.add(as_fractions([1, -1])) == 1
        assert basis.add(as_fractions([2, 0])) is None
        coords = basis.coordinates(as_fractions([3, 1]))
        assert coords == {0: 2, 1: 1}

    def test_outside_span(self):
        basis = RationalBasis(3)
        basis.add(as_fractions([1, 0, 0]))
        assert basis.coordinates(as_fractions([0, 1, 0])) is None


@pytest.mark.unit
class TestIpi:
    def test_s3_three(self, s3, pi3):
        ptable = ipi(s3, pi3)
        assert len(pi_classes(s3, pi3)) == 2
        assert [m.degree for m in ptable.members] == [1, 2]
        assert ptable.decomposition.tolist() == [[1, 0], [1, 0], [0, 1]]
        assert ptable.lift_rows(0) == (0, 1)
        assert ptable.lift_rows(1) == (2,)
        assert ptable.member_of_row(2) == 1

    def test_s3_two(self, s3, pi2):
        ptable = ipi(s3, pi2)
        assert [m.degree for m in ptable.members] == [1, 1]
        assert ptable.decomposition.tolist() == [[1, 0], [0, 1], [1, 1]]
        assert ptable.member_of_row(2) is None

    @pytest.mark.parametrize("name", SMALL)
    def test_count_matches_pi_classes(self, name):
        G = builtin_group(name)
        for pi in _prime_sets(G.order):
            assert len(ipi(G, pi)) == len(pi_classes(G, pi))

    @pytest.mark.parametrize("name", SMALL)
    def test_agrees_with_bruteforce(self, name):
        G = builtin_group(name)
        for pi in _prime_sets(G.order):
            assert set(ipi(G, pi).members) == set(ipi_bruteforce(G, pi))

    def test_all_primes_gives_irr(self, pi3):
        G = builtin_group("s4")
        ptable = ipi(G, PiSet.of([2, 3]))
        assert len(ptable) == 5
        assert ptable.decomposition.sum() == 5
        assert all(ptable.member_of_row(i) is not None for i in range(5))

    def test_linear_restrictions_are_irreducible(self, a4, pi2):
        ptable = ipi(a4, pi2)
        for chi in character_table(a4).rows:
            if chi.degree_int == 1:
                assert ptable.index_of(restrict_to_pi(chi, pi2)) is not None

    def test_not_separable(self):
        with pytest.raises(NotPiSeparableError):
            ipi(builtin_group("a5"), PiSet.of([2]))

    def test_lifts_and_decomposition(self, s3, pi3):
        rows = character_table(s3).rows
        phi = partial_from_values(s3, pi3, [1, 1])
        assert lifts_of(phi) == (rows[0], rows[1])
        psi = partial_from_values(s3, pi3, [3, 0])
        with pytest.raises(NotACharacterError):
            lifts_of(psi)
        assert [m for _, m in decompose_partial(psi, ipi(s3, pi3))] == [1, 1]
        with pytest.raises(GroupMismatchError):
            partial_from_values(s3, pi3, [1, 1, 1])

    def test_restrict_partial(self, s3, pi3):
        a3 = s3.subgroup_generated([parse_cycles("(1 2 3)", 3)])
        phi = ipi(s3, pi3).members[1]
        restricted = restrict_partial(phi, a3)
        assert restricted.values == (2, -1, -1)


@pytest.mark.unit
class TestSpecial:
    def test_s3(self, s3, pi3):
        table = character_table(s3)
        assert special_characters(table, pi3).tolist() == [True, False, False]
        assert special_characters(table, pi3.complement_set()).tolist() == [True, True, False]

    def test_factorization(self, s3, pi3):
        rows = character_table(s3).rows
        f = pi_factorize(rows[1], pi3)
        assert f is not None
        assert (f.alpha.index, f.beta.index) == (0, 1)
        assert is_pi_factored(rows[0], pi3)
        assert not is_pi_factored(rows[2], pi3)

    def test_p_group(self, pi3):
        table = character_table(builtin_group("e27"))
        assert all(is_pi_special(chi, pi3) for chi in table.rows)

    def test_a4(self, a4, pi2):
        table = character_table(a4)
        assert special_characters(table, pi2).tolist() == [True, False, False, False]
        assert special_characters(table, pi2.complement_set()).tolist() == [True, True, True, False]
