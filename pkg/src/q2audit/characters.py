"""Dirichlet characters modulo a prime with exact values.

A character mod p is fixed by an exponent index ``c``: with ``g`` the smallest
primitive root, chi(g^k) = exp(2*pi*i*c*k/(p-1)).  Values are carried as
reduced fractions of a full turn so that tests like ``chi(n) == 1`` never go
through floating point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .arith import DEFAULT_TABLE_LIMIT, IndexTable, cached_index_table, is_prime, jacobi
from .errors import CapacityError, DomainError

Mode = Literal["tabled", "quadratic"]


@dataclass(frozen=True)
class CharValue:
    kind: Literal["zero", "root_of_unity"]
    numerator: int = 0
    denominator: int = 1

    @classmethod
    def zero(cls) -> CharValue:
        return cls("zero", 0, 1)

    @classmethod
    def turn(cls, num: int, den: int) -> CharValue:
        fr = Fraction(num % den, den)
        return cls("root_of_unity", fr.numerator, fr.denominator)

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def is_one(self) -> bool:
        return self.kind == "root_of_unity" and self.numerator == 0

    def __mul__(self, other: CharValue) -> CharValue:
        if self.is_zero or other.is_zero:
            return CharValue.zero()
        s = Fraction(self.numerator, self.denominator) + Fraction(other.numerator, other.denominator)
        return CharValue.turn(s.numerator, s.denominator)


ONE = CharValue.turn(0, 1)


def complex_value(v: CharValue) -> complex:
    if v.is_zero:
        return 0j
    # exact values at the quarter turns keep |z| = 1 and real/imag parts clean
    quarter = {(0, 1): 1 + 0j, (1, 4): 1j, (1, 2): -1 + 0j, (3, 4): -1j}
    hit = quarter.get((v.numerator, v.denominator))
    if hit is not None:
        return hit
    return cmath.exp(2j * math.pi * v.numerator / v.denominator)


@dataclass(frozen=True)
class CharacterSpec:
    p: int
    c: int
    mode: Mode = "tabled"
    table: IndexTable | None = None

    def __post_init__(self):
        if self.mode == "tabled" and self.table is None:
            raise DomainError("tabled characters need an index table")
        if not 0 <= self.c <= self.p - 2 and self.p > 2:
            raise DomainError(f"exponent index {self.c} outside [0, {self.p - 2}]")

    @property
    def ident(self) -> str:
        return "quadratic" if self.mode == "quadratic" else str(self.c)

    @property
    def is_principal(self) -> bool:
        return self.mode == "tabled" and self.c % (self.p - 1) == 0

    def __call__(self, n: int) -> CharValue:
        return evaluate(self, n)


def character(p: int, c: int, limit: int = DEFAULT_TABLE_LIMIT) -> CharacterSpec:
    return CharacterSpec(p, c % (p - 1) if p > 2 else 0, "tabled", cached_index_table(p, limit))


def quadratic_character(p: int, mode: Mode | None = None, limit: int = DEFAULT_TABLE_LIMIT) -> CharacterSpec:
    """The Legendre symbol mod an odd prime p.

    Without an explicit ``mode`` the tabled form is used when p fits the
    table limit and the Jacobi fast path otherwise.
    """
    if p < 3 or not is_prime(p):
        raise DomainError(f"quadratic character needs an odd prime, got {p}")
    if mode is None:
        mode = "tabled" if p <= limit else "quadratic"
    if mode == "tabled":
        return character(p, (p - 1) // 2, limit)
    return CharacterSpec(p, (p - 1) // 2, "quadratic", None)


def enumerate_characters(p: int, limit: int = DEFAULT_TABLE_LIMIT) -> list[CharacterSpec]:
    """All p-2 non-principal characters mod p, ordered by exponent index."""
    table = cached_index_table(p, limit)
    return [CharacterSpec(p, c, "tabled", table) for c in range(1, p - 1)]


def order(chi: CharacterSpec) -> int:
    if chi.mode == "quadratic":
        return 2
    return (chi.p - 1) // math.gcd(chi.c, chi.p - 1)


def evaluate(chi: CharacterSpec, n: int) -> CharValue:
    p = chi.p
    n %= p
    if n == 0:
        return CharValue.zero()
    if chi.mode == "quadratic":
        return ONE if jacobi(n, p) == 1 else CharValue.turn(1, 2)
    return CharValue.turn(chi.c * chi.table[n], p - 1)


def is_one(chi: CharacterSpec, n: int) -> bool:
    """chi(n) == 1, decided with integer arithmetic only."""
    n %= chi.p
    if n == 0:
        return False
    if chi.mode == "quadratic":
        return jacobi(n, chi.p) == 1
    return chi.c * chi.table[n] % (chi.p - 1) == 0


# -- bulk evaluation over one full period -----------------------------------


def exponents(chi: CharacterSpec, limit: int = DEFAULT_TABLE_LIMIT) -> np.ndarray:
    """e[n] with chi(n) = exp(2*pi*i*e[n]/(p-1)) for 1 <= n < p; e[0] = -1."""
    p = chi.p
    if chi.mode == "tabled":
        e = (chi.c * chi.table.ind) % (p - 1)
    else:
        if p > limit:
            raise CapacityError(f"full-period evaluation of p={p} exceeds limit {limit}")
        e = np.full(p, (p - 1) // 2, dtype=np.int64)
        x = np.arange(1, (p + 1) // 2, dtype=np.int64)
        e[(x * x) % p] = 0
    e[0] = -1
    return e


def complex_values(chi: CharacterSpec) -> np.ndarray:
    """chi(n) for 0 <= n < p as complex128, chi(0) = 0."""
    e = exponents(chi)
    d = order(chi)
    step = (chi.p - 1) // d
    # reduce to the order-d subgroup so equal values map to identical floats
    k = np.where(e >= 0, e // step, 0)
    roots = np.exp(2j * np.pi * np.arange(d) / d)
    if d == 2:
        roots = np.array([1.0 + 0j, -1.0 + 0j])
    elif d == 4:
        roots = np.array([1.0, 1j, -1.0, -1j], dtype=complex)
    vals = roots[k]
    vals[0] = 0
    return vals


def max_partial_sum(chi: CharacterSpec) -> float:
    """max over x of |sum_{1 <= n <= x} chi(n)| across one period."""
    return float(np.max(np.abs(np.cumsum(complex_values(chi)))))
