"""Tests for exact cyclotomic arithmetic."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cyclotomic.arrays import pack, unpack
from src.cyclotomic.cyc import Cyc, phi_coefficients

CONDUCTORS = [1, 3, 4, 5, 7, 8, 9, 12]


@st.composite
def cycs(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    coefficients = draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    denominator = draw(st.integers(1, 3))
    return Cyc(n, coefficients, denominator)


@pytest.mark.unit
class TestCycBasics:
    def test_cyclotomic_polynomial(self):
        assert phi_coefficients(3) == (1, 1, 1)
        assert phi_coefficients(4) == (1, 0, 1)

    def test_roots_of_unity_sum_to_zero(self):
        assert Cyc.root(3) + Cyc.root(3, 2) == -1
        assert sum((Cyc.root(5, k) for k in range(5)), Cyc.zero()) == 0

    def test_powers(self):
        i = Cyc.root(4)
        assert i * i == -1
        assert Cyc.root(7) ** 7 == 1
        assert Cyc.root(8) ** 2 == i

    def test_rational_values(self):
        half = Cyc.rational(Fraction(1, 2))
        assert half.is_rational
        assert half.to_rational() == Fraction(1, 2)
        assert half.to_int() is None
        assert (half + half).to_int() == 1
        assert Cyc.root(3).to_rational() is None

    def test_mixed_conductors(self):
        w = Cyc.root(3)
        i = Cyc.root(4)
        assert w * i == Cyc.root(12, 7)
        assert (w * i).conductor == 12

    def test_conjugate_and_galois(self):
        w = Cyc.root(3)
        assert w.conjugate() == Cyc.root(3, 2)
        assert w * w.conjugate() == 1
        assert w.galois(2) == w.conjugate()
        with pytest.raises(ValueError):
            w.galois(3)

    def test_division(self):
        x = Cyc(5, [1, 2, 0, -1, 0])
        assert (x / x) == 1
        with pytest.raises(ZeroDivisionError):
            x / 0

    def test_immutable(self):
        with pytest.raises(AttributeError):
            Cyc.one().conductor = 3

    def test_complex_value(self):
        assert complex(Cyc.root(4)) == pytest.approx(1j)

    def test_json(self):
        x = Cyc(12, [0, 1, 0, 0, Fraction(1, 3)])
        assert Cyc.from_json(x.to_json()) == x

    def test_hash_is_conductor_independent(self):
        assert hash(Cyc.root(4)) == hash(Cyc.root(8, 2))
        assert hash(Cyc.root(3) + Cyc.root(3, 2)) == hash(-1)

    def test_pack_unpack(self):
        values = [Cyc.root(3), Cyc.rational(Fraction(1, 2)), Cyc.zero()]
        arr, den = pack(values, 3)
        assert den == 2
        assert isinstance(arr, np.ndarray)
        assert unpack(arr, den, 3) == tuple(values)


@pytest.mark.unit
class TestCycFieldLaws:
    @settings(max_examples=60, deadline=None)
    @given(cycs(), cycs())
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=60, deadline=None)
    @given(cycs(), cycs(), cycs())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=60, deadline=None)
    @given(cycs(), cycs())
    def test_subtraction_inverts_addition(self, a, b):
        assert (a + b) - b == a

    @settings(max_examples=40, deadline=None)
    @given(cycs(), cycs())
    def test_division_inverts_multiplication(self, a, b):
        if b:
            assert (a * b) / b == a

    @settings(max_examples=60, deadline=None)
    @given(cycs())
    def test_conjugation_is_an_involution(self, a):
        assert a.conjugate().conjugate() == a
        assert (a * a.conjugate()).conjugate() == a * a.conjugate()

    @settings(max_examples=60, deadline=None)
    @given(cycs(), cycs())
    def test_complex_embedding_is_multiplicative(self, a, b):
        assert complex(a * b) == pytest.approx(complex(a) * complex(b), abs=1e-6)
