"""Exact integer substrate: prime sieve, multiplicative functions, Bernoulli numbers.

Everything here is exact (integers and rationals); floating point enters only
in the analytic modules built on top.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import InvalidArgumentError

# Segment size for the segmented sieve; keeps peak memory modest even at 1e8.
_SEGMENT = 1 << 20


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit`` (inclusive), ascending."""

    limit: int
    primes: np.ndarray  # int64, sorted ascending

    def __len__(self) -> int:
        return len(self.primes)

    def in_range(self, lo: int, hi: int) -> np.ndarray:
        """Primes p with lo <= p <= hi."""
        i = np.searchsorted(self.primes, lo, side="left")
        j = np.searchsorted(self.primes, hi, side="right")
        return self.primes[i:j]

    def below(self, bound: int) -> np.ndarray:
        """Primes p < bound."""
        return self.primes[: np.searchsorted(self.primes, bound, side="left")]


def _simple_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve(limit: int) -> PrimeTable:
    """Segmented Eratosthenes sieve up to ``limit`` inclusive."""
    if limit < 2:
        raise InvalidArgumentError("sieve limit must be >= 2")
    root = math.isqrt(limit)
    base = _simple_sieve(max(root, 2))
    chunks = []
    for lo in range(2, limit + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                seg[start - lo :: p] = False
        chunks.append(lo + np.flatnonzero(seg).astype(np.int64))
    return PrimeTable(limit=limit, primes=np.concatenate(chunks))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise InvalidArgumentError("factorize requires n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class FactoredModulus:
    q: int
    factorization: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, q: int) -> "FactoredModulus":
        return cls(q=q, factorization=tuple(factorize(q)))


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)^(number of prime factors)."""
    if n < 1:
        raise InvalidArgumentError("mobius requires n >= 1")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler totient."""
    if n < 1:
        raise InvalidArgumentError("euler_phi requires n >= 1")
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


class BernoulliCache:
    """Exact Bernoulli numbers B_0, B_1, ... (B_1 = -1/2 convention), grown on demand."""

    def __init__(self, up_to: int = 2):
        if up_to < 0:
            raise InvalidArgumentError("up_to must be >= 0")
        self._values: list[Fraction] = [Fraction(1)]
        self.ensure(up_to)

    def ensure(self, n: int) -> None:
        # sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
        while len(self._values) <= n:
            m = len(self._values)
            acc = sum(
                Fraction(math.comb(m + 1, j)) * self._values[j] for j in range(m)
            )
            self._values.append(-acc / (m + 1))

    def __getitem__(self, n: int) -> Fraction:
        self.ensure(n)
        return self._values[n]


def bernoulli(up_to: int) -> BernoulliCache:
    """Bernoulli numbers B_0 .. B_up_to as exact rationals."""
    return BernoulliCache(up_to)
