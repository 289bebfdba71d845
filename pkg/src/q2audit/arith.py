"""Exact integer primitives: sieving, multiplicative functions, primitive roots,
discrete-log tables and the Jacobi symbol.

Everything here works on Python ints, so there is no overflow to guard
against; numpy arrays are used only as compact storage for tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError

DEFAULT_TABLE_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: np.ndarray = field(repr=False)
    smallest_factor: np.ndarray = field(repr=False)

    def __contains__(self, n: int) -> bool:
        return 2 <= n <= self.limit and int(self.smallest_factor[n]) == n

    def primes_upto(self, x: int) -> np.ndarray:
        return self.primes[: int(np.searchsorted(self.primes, x, side="right"))]


def sieve(limit: int) -> PrimeTable:
    """Least-prime-factor sieve up to ``limit`` inclusive."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for n in range(2, math.isqrt(limit) + 1):
        if spf[n] == 0:
            block = spf[n * n :: n]
            block[block == 0] = n
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[0] = 0
    spf[1] = 1
    primes = np.flatnonzero(spf[2:] == np.arange(2, limit + 1)) + 2
    return PrimeTable(limit, primes, spf)


@lru_cache(maxsize=8)
def cached_sieve(limit: int) -> PrimeTable:
    return sieve(limit)


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; intended for n up to ~10^12."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError(f"mobius undefined at {n}")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"euler_phi undefined at {n}")
    out = n
    for q in factorize(n):
        out -= out // q
    return out


def phi_table(limit: int) -> np.ndarray:
    """phi(n) for 0 <= n <= limit (phi(0) stored as 0)."""
    phi = np.arange(limit + 1, dtype=np.int64)
    for q in range(2, limit + 1):
        if phi[q] == q:
            phi[q::q] -= phi[q::q] // q
    phi[0] = 0
    return phi


def mobius_table(limit: int) -> np.ndarray:
    mu = np.ones(limit + 1, dtype=np.int64)
    spf = cached_sieve(max(limit, 2)).smallest_factor
    for q in range(2, limit + 1):
        if spf[q] == q:
            mu[q::q] *= -1
            mu[q * q :: q * q] = 0
    mu[0] = 0
    return mu


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def primitive_root(p: int) -> int:
    """Smallest generator of (Z/pZ)^*."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return 1
    cofactors = [(p - 1) // q for q in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
    raise AssertionError("unreachable: Z/pZ^* is cyclic")


@dataclass(frozen=True)
class IndexTable:
    """Discrete logarithms base ``g``; ``ind[0]`` holds the sentinel -1."""

    p: int
    g: int
    ind: np.ndarray = field(repr=False)

    def __getitem__(self, n: int) -> int:
        return int(self.ind[n % self.p])


def build_index_table(p: int, limit: int = DEFAULT_TABLE_LIMIT) -> IndexTable:
    if p > limit:
        raise CapacityError(
            f"p={p} exceeds the index-table limit {limit}; "
            "use the quadratic fast path (mode='quadratic') for large moduli"
        )
    g = primitive_root(p)
    ind = np.full(p, -1, dtype=np.int64)
    x = 1
    for k in range(p - 1):
        ind[x] = k
        x = x * g % p
    return IndexTable(p, g, ind)


@lru_cache(maxsize=64)
def cached_index_table(p: int, limit: int = DEFAULT_TABLE_LIMIT) -> IndexTable:
    return build_index_table(p, limit)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"jacobi needs odd positive modulus, got {n}")
    a %= n
    acc = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a %= n
    return acc if n == 1 else 0
