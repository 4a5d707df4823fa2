"""Finite and cofinite sets of primes.

A :class:`PrimeSet` is either a finite set of primes or the set of all primes
with finitely many removed. Both kinds are closed under the boolean
operations, so equality and emptiness stay decidable.

>>> a = PrimeSet.of(2, 3, 5)
>>> b = PrimeSet.all_except(3)
>>> a & b
PrimeSet({2,5})
>>> ~b
PrimeSet({3})
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from sympy import isprime, primerange

from .errors import GrammarError


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, or raise :class:`GrammarError` if it is not a prime."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise GrammarError(f"expected a prime, got {p!r}")
    if not isprime(p):
        raise GrammarError(f"{p} is not prime")
    return p


def primes_up_to(n: int) -> list[int]:
    return list(primerange(2, n + 1))


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes (``cofinite=False``) or the complement of one.

    ``basis`` is the sorted tuple of listed primes: the members of a finite
    set, or the excluded primes of a cofinite one. Build values through the
    class methods, which validate and sort.
    """

    cofinite: bool
    basis: tuple[int, ...]

    def __post_init__(self):
        for p in self.basis:
            check_prime(p)
        if any(a >= b for a, b in zip(self.basis, self.basis[1:])):
            raise GrammarError("prime set basis must be strictly increasing")

    @classmethod
    def of(cls, *primes: int) -> PrimeSet:
        return cls.finite(primes)

    @classmethod
    def finite(cls, primes: Iterable[int]) -> PrimeSet:
        return cls(False, tuple(sorted({check_prime(p) for p in primes})))

    @classmethod
    def all_except(cls, *primes: int) -> PrimeSet:
        return cls(True, tuple(sorted({check_prime(p) for p in primes})))

    def __contains__(self, p: int) -> bool:
        check_prime(p)
        return (p in self.basis) != self.cofinite

    def __iter__(self) -> Iterator[int]:
        if self.cofinite:
            raise TypeError("cannot iterate over a cofinite prime set")
        return iter(self.basis)

    def __len__(self) -> int:
        if self.cofinite:
            raise TypeError("a cofinite prime set has no finite length")
        return len(self.basis)

    def is_empty(self) -> bool:
        return not self.cofinite and not self.basis

    def is_finite(self) -> bool:
        return not self.cofinite

    def is_all(self) -> bool:
        return self.cofinite and not self.basis

    def members_up_to(self, n: int) -> list[int]:
        return [p for p in primes_up_to(n) if p in self]

    def __invert__(self) -> PrimeSet:
        return PrimeSet(not self.cofinite, self.basis)

    def __and__(self, other: PrimeSet) -> PrimeSet:
        a, b = set(self.basis), set(other.basis)
        match self.cofinite, other.cofinite:
            case False, False:
                return PrimeSet(False, tuple(sorted(a & b)))
            case False, True:
                return PrimeSet(False, tuple(sorted(a - b)))
            case True, False:
                return PrimeSet(False, tuple(sorted(b - a)))
            case _:
                return PrimeSet(True, tuple(sorted(a | b)))

    def __or__(self, other: PrimeSet) -> PrimeSet:
        return ~(~self & ~other)

    def __sub__(self, other: PrimeSet) -> PrimeSet:
        return self & ~other

    def __xor__(self, other: PrimeSet) -> PrimeSet:
        return (self - other) | (other - self)

    def issubset(self, other: PrimeSet) -> bool:
        return (self - other).is_empty()

    def sort_key(self) -> tuple:
        return (self.cofinite, len(self.basis), self.basis)

    def __str__(self) -> str:
        body = "{" + ",".join(map(str, self.basis)) + "}"
        if not self.cofinite:
            return body
        return "all" if not self.basis else "all\\" + body

    def __repr__(self) -> str:
        return f"PrimeSet({self})"


EMPTY = PrimeSet(False, ())
ALL = PrimeSet(True, ())
