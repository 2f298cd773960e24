"""
Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored as integer numerators over a single positive denominator.
The numerators are the coefficients of the unique representative of degree
below phi(n) modulo the n-th cyclotomic polynomial, padded with zeros to
length n. Two values of the same conductor are equal iff their stored data
are equal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import cyclotomic_poly, mobius, totient

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def phi_coefficients(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    poly = cyclotomic_poly(n, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def reduction_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Row s is x^s reduced modulo Phi_n, padded to length n."""
    phi = phi_coefficients(n)
    d = len(phi) - 1
    rows: List[Tuple[int, ...]] = []
    current = [0] * d
    current[0] = 1
    for _ in range(n):
        rows.append(tuple(current) + (0,) * (n - d))
        lead = current[-1]
        shifted = [0] + current[:-1]
        current = [shifted[i] - lead * phi[i] for i in range(d)]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> Tuple[Fraction, ...]:
    """Galois-average of zeta_n^j, i.e. mu(n/g)/phi(n/g) with g = gcd(n, j)."""
    weights = []
    for j in range(n):
        m = n // math.gcd(n, j)
        weights.append(Fraction(int(mobius(m)), int(totient(m))))
    return tuple(weights)


def _reduce(n: int, raw: Sequence[int]) -> List[int]:
    table = reduction_table(n)
    d = len(phi_coefficients(n)) - 1
    out = [0] * n
    for j, c in enumerate(raw):
        if not c:
            continue
        j %= n
        if j < d:
            out[j] += c
        else:
            row = table[j]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    return out


class Cyc:
    """
    An element of Q(zeta_n).

    Supports +, -, *, / by nonzero elements, complex conjugation, Galois
    automorphisms and comparison with ints and Fractions. Instances are
    immutable.
    """

    __slots__ = ("conductor", "numerators", "denominator")

    conductor: int
    numerators: Tuple[int, ...]
    denominator: int

    def __init__(self, conductor: int, coefficients: Iterable[Rational] = (), denominator: int = 1):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        coefficients = list(coefficients)
        den = reduce(lambda acc, c: acc * Fraction(c).denominator // math.gcd(acc, Fraction(c).denominator),
                     coefficients, 1)
        raw = [int(Fraction(c) * den) for c in coefficients]
        folded = [0] * conductor
        for j, c in enumerate(raw):
            folded[j % conductor] += c
        self._set(conductor, _reduce(conductor, folded), den * denominator)

    def _set(self, n: int, nums: Sequence[int], den: int) -> None:
        if den == 0:
            raise ZeroDivisionError("Cyc denominator is zero")
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        g = reduce(math.gcd, nums, den)
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            den = 1
        object.__setattr__(self, "conductor", n)
        object.__setattr__(self, "numerators", tuple(nums))
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Cyc is immutable")

    @classmethod
    def _raw(cls, n: int, nums: Sequence[int], den: int = 1) -> "Cyc":
        """Build from numerators already reduced modulo Phi_n."""
        obj = cls.__new__(cls)
        obj._set(n, list(nums), den)
        return obj

    @classmethod
    def from_reduced(cls, n: int, nums: Sequence[int], den: int = 1) -> "Cyc":
        """Build from numerators that are already canonical for conductor n."""
        padded = list(nums) + [0] * (n - len(nums))
        return cls._raw(n, padded, den)

    @classmethod
    def root(cls, n: int, k: int = 1) -> "Cyc":
        raw = [0] * n
        raw[k % n] = 1
        return cls._raw(n, _reduce(n, raw))

    @classmethod
    def rational(cls, value: Rational) -> "Cyc":
        q = Fraction(value)
        return cls._raw(1, [q.numerator], q.denominator)

    @classmethod
    def zero(cls) -> "Cyc":
        return cls._raw(1, [0])

    @classmethod
    def one(cls) -> "Cyc":
        return cls._raw(1, [1])

    # conversions

    def lift(self, m: int) -> "Cyc":
        """Re-express in Q(zeta_m); m must be a multiple of the conductor."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot lift conductor {n} to {m}")
        step = m // n
        raw = [0] * m
        for j, c in enumerate(self.numerators):
            if c:
                raw[j * step] = c
        return Cyc._raw(m, _reduce(m, raw), self.denominator)

    @property
    def is_rational(self) -> bool:
        return not any(self.numerators[1:])

    def to_rational(self) -> Optional[Fraction]:
        """The rational value, or None when the element is irrational."""
        if not self.is_rational:
            return None
        return Fraction(self.numerators[0], self.denominator)

    def to_int(self) -> Optional[int]:
        q = self.to_rational()
        if q is None or q.denominator != 1:
            return None
        return q.numerator

    def coefficients(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.denominator) for c in self.numerators)

    # arithmetic

    @staticmethod
    def _coerce(other: Any) -> Optional["Cyc"]:
        if isinstance(other, Cyc):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(other)
        return None

    def _common(self, other: "Cyc") -> Tuple["Cyc", "Cyc", int]:
        m = math.lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m), m

    def __add__(self, other: Any) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, m = self._common(o)
        nums = [x * b.denominator + y * a.denominator for x, y in zip(a.numerators, b.numerators)]
        return Cyc._raw(m, nums, a.denominator * b.denominator)

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc._raw(self.conductor, [-c for c in self.numerators], self.denominator)

    def __sub__(self, other: Any) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def _scale(self, q: Fraction) -> "Cyc":
        return Cyc._raw(self.conductor, [c * q.numerator for c in self.numerators], self.denominator * q.denominator)

    def __mul__(self, other: Any) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational:
            return self._scale(Fraction(o.numerators[0], o.denominator))
        if self.is_rational:
            return o._scale(Fraction(self.numerators[0], self.denominator))
        a, b, m = self._common(o)
        raw = [0] * m
        for i, x in enumerate(a.numerators):
            if not x:
                continue
            for j, y in enumerate(b.numerators):
                if y:
                    raw[(i + j) % m] += x * y
        return Cyc._raw(m, _reduce(m, raw), a.denominator * b.denominator)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Multiplicative inverse via the product of the other Galois conjugates."""
        if not any(self.numerators):
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational:
            return Cyc.rational(1 / Fraction(self.numerators[0], self.denominator))
        n = self.conductor
        others = Cyc.one()
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                others = others * self.galois(k)
        norm = (self * others).to_rational()
        assert norm is not None and norm != 0
        return others._scale(1 / norm)

    def __truediv__(self, other: Any) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "Cyc":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "Cyc":
        """Apply zeta_n -> zeta_n^k (k coprime to n)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not coprime to conductor {n}")
        raw = [0] * n
        for j, c in enumerate(self.numerators):
            if c:
                raw[(j * k) % n] += c
        return Cyc._raw(n, _reduce(n, raw), self.denominator)

    def conjugate(self) -> "Cyc":
        return self.galois(-1)

    def reduce_mod(self, p: int, z: int) -> int:
        """Image in F_p under zeta_n -> z, where z has multiplicative order n mod p."""
        total = 0
        power = 1
        for c in self.numerators:
            if c:
                total += c * power
            power = power * z % p
        return total * pow(self.denominator, -1, p) % p

    def __complex__(self) -> complex:
        n = self.conductor
        total = 0j
        for j, c in enumerate(self.numerators):
            if c:
                angle = 2 * math.pi * j / n
                total += c * complex(math.cos(angle), math.sin(angle))
        return total / self.denominator

    # comparison and hashing

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.conductor == o.conductor:
            return self.numerators == o.numerators and self.denominator == o.denominator
        a, b, _ = self._common(o)
        return a.numerators == b.numerators and a.denominator == b.denominator

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.numerators[0], self.denominator))
        weights = _trace_weights(self.conductor)
        trace = sum((w * c for w, c in zip(weights, self.numerators) if c), Fraction(0))
        return hash((trace / self.denominator, "cyc"))

    def __bool__(self) -> bool:
        return any(self.numerators)

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coefficients()

    # rendering

    def __str__(self) -> str:
        terms: List[Tuple[Fraction, int]] = [
            (Fraction(c, self.denominator), j) for j, c in enumerate(self.numerators) if c
        ]
        if not terms:
            return "0"
        out = ""
        for position, (coef, j) in enumerate(terms):
            magnitude = abs(coef)
            body = str(magnitude) if j == 0 else f"{magnitude}*z({self.conductor})^{j}"
            if position == 0:
                out = ("-" if coef < 0 else "") + body
            else:
                out += (" - " if coef < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"Cyc({self})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "conductor": self.conductor,
            "coefficients": [str(Fraction(c, self.denominator)) for c in self.numerators],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Cyc":
        return cls(int(data["conductor"]), [Fraction(c) for c in data["coefficients"]])


def cyc_from_root(n: int, k: int) -> Cyc:
    """zeta_n^k in canonical form."""
    return Cyc.root(n, k)


def cyc_combine(op: str, a: Cyc, b: Cyc) -> Cyc:
    """Combine two values with ``add``, ``sub`` or ``mul``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def cyc_conjugate(a: Cyc) -> Cyc:
    return a.conjugate()


def cyc_is_rational(a: Cyc) -> Optional[Fraction]:
    return a.to_rational()
