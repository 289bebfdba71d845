"""Burgess sums S(chi, h, r), their upper bound, and the interval machinery
behind the lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import mpmath
import numpy as np
from mpmath import mpf

from . import analytic
from .arith import cached_index_table, cached_sieve, divisors, is_prime
from .characters import CharacterSpec, complex_values, order, quadratic_character
from .errors import DomainError, HypothesisError
from .nonresidues import least_nonresidues, restricted_nonresidue, restricted_nonresidue_by_order

# Absolute slack for |window| >= h - 2 comparisons made in floating point.
MAGNITUDE_TOL = 1e-9


def character_values(chi: CharacterSpec) -> np.ndarray:
    """chi over one period; int64 for real characters so sums stay exact."""
    vals = complex_values(chi)
    if order(chi) <= 2:
        return vals.real.astype(np.int64)
    return vals


def window_sums(vals: np.ndarray, h: int, start: int = 1) -> np.ndarray:
    """W[x] = sum_{m=start}^{start+h-1} chi(x+m) for 0 <= x < p."""
    p = len(vals)
    if h < 1:
        raise DomainError(f"need h >= 1, got {h}")
    ext = np.tile(vals, (start + h) // p + 2)
    c = np.concatenate(([0], np.cumsum(ext)))
    x = np.arange(p)
    return c[x + start + h] - c[x + start]


def _power_sum(w: np.ndarray, r: int) -> float | int:
    if np.issubdtype(w.dtype, np.integer):
        return int(np.sum((w * w) ** r, dtype=np.int64)) if _fits(w, r) else sum(int(v) ** (2 * r) for v in w)
    return float(np.sum((w.real**2 + w.imag**2) ** r))


def _fits(w: np.ndarray, r: int) -> bool:
    m = int(np.abs(w).max()) if w.size else 0
    return len(w) * float(m) ** (2 * r) < 2**62


def burgess_sum(chi: CharacterSpec, h: int, r: int, vals: np.ndarray | None = None, start: int = 1):
    """S(chi,h,r) = sum_{x=0}^{p-1} |sum_{m=1}^{h} chi(x+m)|^(2r).

    Exact (int) for characters of order <= 2, float otherwise.  ``start=0``
    gives the shifted variant used inside the lower-bound argument; over a
    complete residue system both agree.
    """
    if r < 1:
        raise DomainError("need r >= 1")
    if vals is None:
        vals = character_values(chi)
    return _power_sum(window_sums(vals, h, start), r)


@analytic._precise
def lemma1c_upper(p, h: int, r: int) -> mpf:
    """(1/4)(4r)^r p h^r + (2r-1) p^(1/2) h^(2r)."""
    if h < 1 or r < 1:
        raise DomainError("need h, r >= 1")
    first = Fraction((4 * r) ** r * p * h**r, 4)
    return mpf(first.numerator) / first.denominator + (2 * r - 1) * mpmath.sqrt(p) * mpf(h) ** (2 * r)


# -- intervals --------------------------------------------------------------


@dataclass(frozen=True)
class IntervalSpec:
    """I = (pt/q, (H+pt)/q], I* = (pt/q, (H+pt)/q - h], J and J* mirrored."""

    q: int
    t: int
    p: int
    H: int
    h: int

    @property
    def I(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.p * self.t, self.q), Fraction(self.H + self.p * self.t, self.q)

    @property
    def I_star(self) -> tuple[Fraction, Fraction]:
        a, b = self.I
        return a, b - self.h

    @property
    def J(self) -> tuple[Fraction, Fraction]:
        a, b = self.I
        return -b, -a

    @property
    def J_star(self) -> tuple[Fraction, Fraction]:
        a, b = self.J
        return a, b - self.h

    @property
    def starred_empty(self) -> bool:
        return self.h * self.q >= self.H

    def I_star_points(self) -> range:
        a, b = self.I_star
        return range(math.floor(a) + 1, math.floor(b) + 1)

    def J_star_points(self) -> range:
        a, b = self.J_star
        return range(math.ceil(a), math.ceil(b))


def intervals(q: int, t: int, p: int, H: int, h: int) -> IntervalSpec:
    if not 0 <= t < q:
        raise DomainError(f"need 0 <= t < q, got q={q}, t={t}")
    return IntervalSpec(q, t, p, H, h)


def coprime_pairs(X, u: int | None = None) -> Iterator[tuple[int, int]]:
    """(q, t) with 0 <= t < q <= X, gcd(q, t) = 1 and, if given, gcd(q, u) = 1."""
    for q in range(1, math.floor(X) + 1):
        if u is not None and q % u == 0:
            continue
        for t in range(q):
            if math.gcd(q, t) == 1:
                yield q, t


def _overlap_open_closed(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]) -> bool:
    # both half-open with the same orientation; non-empty iff max(left) < min(right)
    return max(x[0], y[0]) < min(x[1], y[1])


@dataclass(frozen=True)
class DisjointResult:
    X: float
    H: int
    p: int
    count: int
    passed: bool
    collision: tuple | None = None


def check_interval_disjoint(X, H: int, p: int, brute: bool = False) -> DisjointResult:
    """Disjointness of the I(q,t) family, and of the J(q,t) family, for q <= X.

    The default sorts by left endpoint and compares neighbours; ``brute``
    compares every pair.  Endpoints stay exact rationals throughout.
    """
    if Fraction(X) <= 1:
        raise DomainError("need X > 1")
    if Fraction(X) * H >= p:
        raise DomainError(f"precondition X*H < p violated (X={X}, H={H}, p={p})")
    specs = [IntervalSpec(q, t, p, H, 0) for q, t in coprime_pairs(Fraction(X))]
    for family in ("I", "J"):
        ivs = [(getattr(s, family), (s.q, s.t)) for s in specs]
        if brute:
            for i in range(len(ivs)):
                for j in range(i + 1, len(ivs)):
                    if _overlap_open_closed(ivs[i][0], ivs[j][0]):
                        return DisjointResult(float(X), H, p, len(specs), False, (family, ivs[i][1], ivs[j][1]))
        else:
            ivs.sort(key=lambda iv: iv[0][0])
            for (a, ka), (b, kb) in zip(ivs, ivs[1:]):
                if _overlap_open_closed(a, b):
                    return DisjointResult(float(X), H, p, len(specs), False, (family, ka, kb))
    return DisjointResult(float(X), H, p, len(specs), True)


# -- almost-constant windows ------------------------------------------------


def verify_hypothesis(chi: CharacterSpec, u: int, H: int, vals: np.ndarray | None = None) -> bool:
    """chi(n) = 1 for every n in [1, H] coprime to u."""
    if vals is None:
        vals = character_values(chi)
    p = len(vals)
    n = np.arange(1, H + 1)
    n = n[n % u != 0]
    v = vals[n % p]
    return bool(np.all(v == 1))


@dataclass(frozen=True)
class AlmostConstantResult:
    q: int
    t: int
    points: int
    min_magnitude: float
    bound: int
    passed: bool


def check_almost_constant(
    chi: CharacterSpec,
    u: int,
    H: int,
    h: int,
    q: int,
    t: int,
    vals: np.ndarray | None = None,
    window: np.ndarray | None = None,
    verify: bool = True,
) -> AlmostConstantResult:
    """|sum_{m=0}^{h-1} chi(z+m)| >= h - 2 for every integer z in I*(q,t) and J*(q,t)."""
    if not is_prime(u):
        raise DomainError(f"u={u} must be prime")
    if h > u:
        raise HypothesisError(f"need h <= u, got h={h}, u={u}")
    if q % u == 0:
        raise HypothesisError(f"need gcd(q, u) = 1, got q={q}, u={u}")
    if vals is None:
        vals = character_values(chi)
    if verify and not verify_hypothesis(chi, u, H, vals):
        raise HypothesisError(f"chi(n) != 1 for some n <= {H} coprime to {u}")
    p = chi.p
    spec = intervals(q, t, p, H, h)
    if window is None:
        window = window_sums(vals, h, start=0)
    z = np.fromiter((*spec.I_star_points(), *spec.J_star_points()), dtype=np.int64)
    if z.size == 0:
        return AlmostConstantResult(q, t, 0, math.inf, h - 2, True)
    mags = np.abs(window[z % p])
    lo = float(mags.min())
    return AlmostConstantResult(q, t, int(z.size), lo, h - 2, lo >= h - 2 - MAGNITUDE_TOL)


# -- lower bound --------------------------------------------------------------


@dataclass(frozen=True)
class PremiseFlags:
    u_prime: bool
    h_le_u: bool
    two_h_lt_H: bool
    H_le_sqrt_2hp: bool
    p_ge_5: bool

    @property
    def all(self) -> bool:
        return all((self.u_prime, self.h_le_u, self.two_h_lt_H, self.H_le_sqrt_2hp, self.p_ge_5))


@dataclass(frozen=True)
class PropositionLower:
    lower_full: mpf | None
    lower_intermediate: int
    phi_sum: int
    X: Fraction
    flags: PremiseFlags


def premise_flags(p: int, h: int, u: int, H: int) -> PremiseFlags:
    return PremiseFlags(
        is_prime(u), h <= u, 2 * h < H, H * H <= 2 * h * p, p >= 5
    )


@analytic._precise
def proposition_lower(p: int, h: int, r: int, u: int, H: int) -> PropositionLower:
    """Both forms of the lower bound on S(chi,h,r) for the instance (p,h,r,u,H).

    ``lower_intermediate`` = 2h (h-2)^(2r) sum_{q<=X,(q,u)=1} phi(q), exact;
    ``lower_full`` replaces the phi-sum by its analytic lower bound.  Both are
    0 when h <= 2; ``lower_full`` is None when X = H/(2h) <= 1.
    """
    flags = premise_flags(p, h, u, H)
    X = Fraction(H, 2 * h)
    weight = (h - 2) ** (2 * r) if h > 2 else 0
    phi_sum = analytic.coprime_phi_sum(X, u) if X >= 1 else 0
    inter = 2 * h * weight * phi_sum
    full = None
    if X > 1 and flags.u_prime:
        Xm = mpf(X.numerator) / X.denominator
        full = (
            6 / mpmath.pi**2 * (1 - mpf(1) / u) * h * weight * Xm**2 * analytic.f(Xm, u)
        )
    return PropositionLower(full, inter, phi_sum, X, flags)


def interval_partial_sum(
    window: np.ndarray, p: int, u: int, H: int, h: int, r: int
) -> tuple[float | int, bool]:
    """Sum of |window(z)|^(2r) over z in the starred intervals with q <= X, gcd(q, tu) = 1.

    Returns the sum counted with multiplicity, and whether every residue was
    hit at most once (so the sum is a genuine sub-sum of S).
    """
    X = Fraction(H, 2 * h)
    zs: list[int] = []
    for q, t in coprime_pairs(X, u):
        spec = intervals(q, t, p, H, h)
        zs.extend(spec.I_star_points())
        zs.extend(spec.J_star_points())
    z = np.asarray(zs, dtype=np.int64) % p
    distinct = len(np.unique(z)) == len(z)
    return _power_sum(window[z], r) if z.size else 0, distinct


# -- instance finder ----------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    chi: CharacterSpec
    u: int
    H: int
    h: int

    @property
    def key(self) -> tuple:
        return (self.chi.p, self.chi.c, self.h)


def admissible_h(p: int, u: int, H: int) -> list[int]:
    """h with 3 <= h <= min(u, (H-1)//2) and H^2 <= 2hp."""
    return [h for h in range(3, min(u, (H - 1) // 2) + 1) if H * H <= 2 * h * p]


def instances_for_character(chi: CharacterSpec) -> list[Instance]:
    """Instances with u = q1 and H = n0(q1) - 1 for one character."""
    (u,) = least_nonresidues(chi, 1)
    H = restricted_nonresidue(chi, u) - 1
    return [Instance(chi, u, H, h) for h in admissible_h(chi.p, u, H)]


def instances_for_prime(p: int, scope: str) -> list[Instance]:
    if scope == "quadratic":
        return instances_for_character(quadratic_character(p, mode="quadratic"))
    table = cached_index_table(p)
    primes = cached_sieve(max(p, 2)).primes_upto(p - 1)
    out: list[Instance] = []
    for d in divisors(p - 1)[1:]:
        step = (p - 1) // d
        nonres = primes[table.ind[primes] % d != 0]
        u = int(nonres[0])
        H = restricted_nonresidue_by_order(table.ind, p, d, u) - 1
        hs = admissible_h(p, u, H)
        if not hs:
            continue
        for k in range(1, d):
            if math.gcd(k, d) == 1:
                chi = CharacterSpec(p, k * step, "tabled", table)
                out.extend(Instance(chi, u, H, h) for h in hs)
    out.sort(key=lambda inst: inst.key)
    return out


def find_proposition_instances(
    p_limit: int, modes: str = "quadratic", p_min: int = 5
) -> Iterable[Instance]:
    for p in cached_sieve(max(p_limit, 2)).primes_upto(p_limit):
        p = int(p)
        if p >= max(p_min, 5):
            yield from instances_for_prime(p, modes)
