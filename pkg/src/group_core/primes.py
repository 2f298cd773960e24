"""
Prime sets and pi-numbers.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable

from sympy import isprime, primefactors

from src.utils.errors import InputError


@dataclass(frozen=True)
class PiSet:
    """
    A set of primes pi, or its complement pi'.

    ``complement=True`` means "every prime not in ``primes``", so the complement
    of a finite set stays finite to describe.
    """
    primes: FrozenSet[int]
    complement: bool = False

    @classmethod
    def of(cls, primes: Iterable[int]) -> "PiSet":
        ps = frozenset(int(p) for p in primes)
        if not ps:
            raise InputError("pi must contain at least one prime")
        bad = sorted(p for p in ps if not isprime(p))
        if bad:
            raise InputError(f"not primes: {bad}")
        return cls(ps)

    @classmethod
    def parse(cls, text: str) -> "PiSet":
        """Parse ``"3"`` or ``"2,3"``."""
        try:
            values = [int(part) for part in text.replace(" ", "").split(",") if part]
        except ValueError as e:
            raise InputError(f"invalid prime set {text!r}") from e
        return cls.of(values)

    def contains(self, p: int) -> bool:
        return (p in self.primes) != self.complement

    def is_number(self, n: int) -> bool:
        """True iff every prime divisor of n lies in this set (1 always qualifies)."""
        return all(self.contains(p) for p in primefactors(int(n)))

    def part(self, n: int) -> int:
        """The largest divisor of n that is a number of this set."""
        result = 1
        n = int(n)
        for p in primefactors(n):
            if self.contains(p):
                while n % p == 0:
                    n //= p
                    result *= p
        return result

    def complement_set(self) -> "PiSet":
        return PiSet(self.primes, not self.complement)

    def __str__(self) -> str:
        body = "{" + ",".join(str(p) for p in sorted(self.primes)) + "}"
        return body + ("'" if self.complement else "")
