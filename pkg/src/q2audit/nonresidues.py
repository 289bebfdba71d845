"""Least prime non-residues, the maximal constant run, and Hudson's lemma."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .arith import euler_phi, is_prime
from .characters import CharacterSpec, exponents, is_one
from .errors import DomainError, SearchLimitError


@dataclass(frozen=True)
class NonResidueReport:
    p: int
    character: str
    q: list[int]
    S: int | None
    n0: dict[int, int] = field(default_factory=dict)


def least_nonresidues(chi: CharacterSpec, k: int = 2, search_limit: int | None = None) -> list[int]:
    """The k smallest primes q != p with chi(q) != 1."""
    if k < 1:
        raise DomainError("k must be >= 1")
    limit = chi.p if search_limit is None else search_limit
    found: list[int] = []
    n = 2
    while n <= limit:
        if n != chi.p and is_prime(n) and not is_one(chi, n):
            found.append(n)
            if len(found) == k:
                return found
        n += 1
    raise SearchLimitError(
        f"only {len(found)} of {k} prime non-residues of chi={chi.ident} mod {chi.p} below {limit}"
    )


def restricted_nonresidue(chi: CharacterSpec, u: int, search_limit: int | None = None) -> int:
    """Smallest n >= 1 with gcd(n, u) = 1 and chi(n) != 1 (n need not be prime)."""
    if not is_prime(u):
        raise DomainError(f"u={u} must be prime")
    limit = chi.p if search_limit is None else search_limit
    for n in range(1, limit + 1):
        if n % u and not is_one(chi, n):
            return n
    raise SearchLimitError(f"no n <= {limit} coprime to {u} with chi(n) != 1")


def longest_true_run(mask: np.ndarray) -> int:
    if mask.size == 0 or not mask.any():
        return 0
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    return int((ends - starts).max())


def max_constant_run(chi: CharacterSpec) -> int:
    """Longest block of consecutive n in [1, p-1] on which chi is constant.

    No block can pass through a multiple of p (chi vanishes there and zero is
    not a run value), so scanning one period without wraparound is complete.
    """
    e = exponents(chi)
    same = e[2:] == e[1:-1]
    return longest_true_run(same) + 1


@dataclass(frozen=True)
class HudsonResult:
    q1: int
    q2: int
    S: int
    bound: int
    margin: int
    passed: bool
    vacuous: bool


def hudson_check(chi: CharacterSpec) -> HudsonResult:
    """q2 <= S*q1 + 1, vacuous when (q1, q2) = (2, 3)."""
    if chi.p < 5:
        raise DomainError("Hudson's lemma needs p >= 5")
    q1, q2 = least_nonresidues(chi, 2)
    S = max_constant_run(chi)
    return _hudson(q1, q2, S)


def _hudson(q1: int, q2: int, S: int) -> HudsonResult:
    bound = S * q1 + 1
    vacuous = (q1, q2) == (2, 3)
    margin = bound - q2
    return HudsonResult(q1, q2, S, bound, margin, vacuous or margin >= 0, vacuous)


def report(chi: CharacterSpec, k: int = 2, us: tuple[int, ...] = ()) -> NonResidueReport:
    q = least_nonresidues(chi, k)
    S = max_constant_run(chi) if chi.mode == "tabled" or chi.p <= 10**6 else None
    n0 = {u: restricted_nonresidue(chi, u) for u in (us or (q[0],))}
    return NonResidueReport(chi.p, chi.ident, q, S, n0)


# -- order-level shortcut ---------------------------------------------------
#
# chi(n) == 1 iff d | ind[n], with d the order of chi, and chi(n) == chi(n+1)
# iff d | ind[n+1] - ind[n].  So q_i, n0(u) and S depend on chi only through
# its order, and sweeps over all characters can work one divisor d of p-1 at
# a time.  The per-character functions above are the reference for this.


@dataclass(frozen=True)
class OrderProfile:
    p: int
    d: int
    q: list[int]
    S: int

    @property
    def count(self) -> int:
        """Number of characters mod p with this order."""
        return euler_phi(self.d)

    def hudson(self) -> HudsonResult:
        return _hudson(self.q[0], self.q[1], self.S)


def order_profile(ind: np.ndarray, p: int, d: int, primes: np.ndarray, k: int = 2) -> OrderProfile:
    """q_1..q_k and S shared by every character of order d mod p."""
    if d < 2 or (p - 1) % d:
        raise DomainError(f"d={d} is not a non-trivial divisor of p-1={p - 1}")
    cand = primes[primes < p]
    nonres = cand[ind[cand] % d != 0]
    if nonres.size < k:
        raise SearchLimitError(f"fewer than {k} prime non-residues below p={p} for order {d}")
    steps = (ind[2:] - ind[1:-1]) % d == 0
    return OrderProfile(p, d, [int(x) for x in nonres[:k]], longest_true_run(steps) + 1)


def restricted_nonresidue_by_order(ind: np.ndarray, p: int, d: int, u: int) -> int:
    n = np.arange(1, p, dtype=np.int64)
    hit = n[(n % u != 0) & (ind[1:] % d != 0)]
    if hit.size:
        return int(hit[0])
    if p % u:
        return p
    raise SearchLimitError(f"no restricted non-residue up to p={p}")
