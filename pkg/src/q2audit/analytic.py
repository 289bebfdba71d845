"""Closed-form bounds and the purely analytic lemmas behind them.

Formula values are computed with mpmath at 40 significant digits and
returned as ``mpf``; exact sums are plain integers.  Logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import wraps

import mpmath
import numpy as np
from mpmath import mpf

from .arith import euler_phi, is_prime, phi_table
from .errors import DomainError

DPS = 40
U_FIXED = 89  # the u at which g() evaluates f
P_MIN_THEOREM = 10**7

# C(p0) for p0 = 10^7 .. 10^20, as printed with four decimals.
TABLE1 = {
    7: "11.0421", 8: "8.2760", 9: "7.2906", 10: "6.8121", 11: "6.5496",
    12: "6.3964", 13: "6.3033", 14: "6.2452", 15: "6.2077", 16: "6.1829",
    17: "6.1659", 18: "6.1536", 19: "6.1445", 20: "6.1374",
}

NORTON = 4.7
NORTON_IMPROVED = 3.9
COR2 = 53
COR3 = 24
CONSECUTIVE = 7.1
PV_CONST = mpf("6.5")


def _precise(fn):
    @wraps(fn)
    def inner(*args, **kwargs):
        with mpmath.workdps(DPS):
            return fn(*args, **kwargs)

    return inner


def _check_prime(u: int) -> None:
    if not is_prime(u):
        raise DomainError(f"u={u} must be prime")


@_precise
def f(X, u: int) -> mpf:
    """Correction factor in the lower bound for sums of phi(q) over q coprime to u."""
    X = mpf(X)
    if X <= 1:
        raise DomainError(f"f needs X > 1, got {X}")
    _check_prime(u)
    w = 1 / (1 - mpf(1) / u)
    return 1 - mpmath.pi**2 / 3 * (1 / (2 * X**2) + 1 / (2 * X) + w * (1 + mpmath.log(X)) / X)


@_precise
def constant_K() -> mpf:
    return mpmath.pi * mpmath.e / mpmath.sqrt(2)


@_precise
def g(p) -> mpf:
    p = mpf(p)
    if p < P_MIN_THEOREM:
        raise DomainError(f"g is only defined here for p >= 10^7, got {p}")
    L = mpmath.log(p)
    E2 = mpmath.e**2
    X = constant_K() * p**mpf("0.25") / (2 * E2)
    return mpmath.sqrt((1 + 4 / (3 * L)) / ((1 - 1 / (E2 * L)) * f(X, U_FIXED)))


@_precise
def constant_C_raw(p0) -> mpf:
    p0 = mpf(p0)
    return constant_K() * g(p0) + 1 / (p0 ** mpf("0.25") * mpmath.log(p0))


@_precise
def constant_C(p0, digits: int = 4) -> float:
    """K g(p0) + 1/(p0^(1/4) log p0), rounded up at the given decimal."""
    scale = mpf(10) ** digits
    return float(mpmath.ceil(constant_C_raw(p0) * scale) / scale)


@_precise
def theorem2_bound(p) -> mpf:
    p = mpf(p)
    return constant_K() * g(p) * p ** mpf("0.25") * mpmath.log(p)


@_precise
def theorem1_bound(p, p0) -> mpf:
    """C(p0) p^(1/4) log p; also the q2 bound when q1 > e^2 log p."""
    if mpf(p) < mpf(p0):
        raise DomainError("need p >= p0")
    p = mpf(p)
    return mpf(constant_C(p0)) * p ** mpf("0.25") * mpmath.log(p)


@_precise
def norton_bound(p, improved: bool = False) -> mpf:
    p = mpf(p)
    c = mpf("3.9") if improved else mpf("4.7")
    return c * p ** mpf("0.25") * mpmath.log(p)


@_precise
def cor2_bound(p) -> mpf:
    p = mpf(p)
    return COR2 * p ** mpf("0.25") * mpmath.log(p) ** 2


@_precise
def cor3_bound(p) -> mpf:
    p = mpf(p)
    return COR3 * mpmath.sqrt(p) * mpmath.log(p) ** 2


@_precise
def consecutive_bound(p) -> mpf:
    p = mpf(p)
    return mpf("7.1") * p ** mpf("0.25") * mpmath.log(p)


@_precise
def polya_vinogradov(m) -> mpf:
    """Explicit bound on |sum_{n<x} chi(n)| for a non-principal chi mod m."""
    m = mpf(m)
    return mpmath.sqrt(m) * mpmath.log(m) / (3 * mpmath.log(3)) + PV_CONST * mpmath.sqrt(m)


@_precise
def pv_q2_bound(m) -> tuple[mpf, mpf]:
    """(raw bound from the partial-sum argument, simplified 2 sqrt(m) log m)."""
    m = mpf(m)
    raw = 4 * polya_vinogradov(m) + 2
    return raw, 2 * mpmath.sqrt(m) * mpmath.log(m)


@_precise
def hypothesis_threshold(p) -> mpf:
    """e^2 log p: q1 above this makes the main bound apply to q2."""
    return mpmath.e**2 * mpmath.log(mpf(p))


# -- exact sums against their analytic approximations -----------------------


@dataclass(frozen=True)
class SR1Result:
    X: float
    u: int
    exact_sum: int
    main_term: mpf
    theta: mpf

    @property
    def holds(self) -> bool:
        return abs(self.theta) < 1


def coprime_prefix_sums(limit: int, u: int) -> np.ndarray:
    """P[k] = sum of n <= k with gcd(n, u) = 1, by enumeration."""
    n = np.arange(limit + 1, dtype=np.int64)
    return np.cumsum(np.where(n % u != 0, n, 0))


def _floor(X) -> int:
    if isinstance(X, Fraction):
        return math.floor(X)
    return int(mpmath.floor(mpf(X)))


@_precise
def sr1_decompose(X, u: int, prefix: np.ndarray | None = None) -> SR1Result:
    """Split sum_{n <= X, (n,u)=1} n into (1-1/u) X^2 / 2 + theta X."""
    if mpf(X) <= 1:
        raise DomainError("need X > 1")
    _check_prime(u)
    N = _floor(X)
    if prefix is not None and N < len(prefix):
        exact = int(prefix[N])
    else:
        exact = sum(n for n in range(1, N + 1) if n % u)
    Xm = mpf(X)
    main = (1 - mpf(1) / u) * Xm**2 / 2
    return SR1Result(float(X), u, exact, main, (exact - main) / Xm)


@dataclass(frozen=True)
class PhiSumResult:
    X: float
    u: int
    exact_sum: int
    lower_bound: mpf

    @property
    def margin(self) -> mpf:
        return self.exact_sum - self.lower_bound

    @property
    def holds(self) -> bool:
        return self.exact_sum >= self.lower_bound


def coprime_phi_prefix(limit: int, u: int, phi: np.ndarray | None = None) -> np.ndarray:
    phi = phi_table(limit) if phi is None else phi[: limit + 1]
    q = np.arange(limit + 1, dtype=np.int64)
    return np.cumsum(np.where(q % u != 0, phi, 0))


def coprime_phi_sum(X, u: int) -> int:
    N = _floor(X)
    return sum(euler_phi(q) for q in range(1, N + 1) if q % u)


@_precise
def phi_sum_lower(X, u: int) -> mpf:
    Xm = mpf(X)
    return 3 / mpmath.pi**2 * (1 - mpf(1) / u) * Xm**2 * f(Xm, u)


@_precise
def phi_sum_coprime(X, u: int, prefix: np.ndarray | None = None) -> PhiSumResult:
    """Exact sum of phi(q) over q <= X, gcd(q,u)=1, beside its lower bound."""
    if mpf(X) <= 1:
        raise DomainError("need X > 1")
    _check_prime(u)
    N = _floor(X)
    if prefix is not None and N < len(prefix):
        exact = int(prefix[N])
    else:
        exact = coprime_phi_sum(X, u)
    return PhiSumResult(float(X), u, exact, phi_sum_lower(X, u))


# -- convexity implications -------------------------------------------------


@dataclass(frozen=True)
class ConvexityResult:
    h: int
    r: int
    first: str
    second: str
    third: str

    @property
    def passed(self) -> bool:
        return "fail" not in (self.first, self.second, self.third)


def _verdict(hyp: bool, concl) -> str:
    if not hyp:
        return "vacuous"
    return "pass" if concl() else "fail"


def convexity_check(h: int, r: int) -> ConvexityResult:
    """Check the three implications used to simplify the Burgess inequality.

    Comparisons are exact in rationals.
    """
    if h < 1 or r < 1:
        raise DomainError("need h, r >= 1")

    def first():
        lhs = Fraction(1, 2 * h) * Fraction(4 * r, h - 2) ** r
        rhs = Fraction(1, h + 1) * Fraction(4 * r, h + 1) ** r
        return lhs <= rhs

    def second():
        return Fraction(h, h - 2) ** r < Fraction(7, 6)

    def third():
        return Fraction(2 * r - 1, h) <= Fraction(2 * r, h + 1)

    return ConvexityResult(
        h,
        r,
        _verdict(h >= 6 * r + 5 and h >= 3, first),
        _verdict(h >= 16 * r + 2 and h >= 3, second),
        _verdict(h >= 2 * r - 1, third),
    )


# -- parameter choices inside the main theorem's proof -----------------------


@dataclass(frozen=True)
class ProofParameters:
    p: float
    h: int
    r: int
    convexity: ConvexityResult
    exponent_ratio: mpf  # (4B/A)^r * p^(1/2); the proof's simplification wants <= 1
    x_lower: mpf  # K p^(1/4) / (2 e^2)


@_precise
def proof_parameters(p) -> ProofParameters:
    """h = floor(e^2 log p), r = floor(log p / 4) and the side conditions they meet."""
    pm = mpf(p)
    L = mpmath.log(pm)
    E2 = mpmath.e**2
    h = int(mpmath.floor(E2 * L))
    r = int(mpmath.floor(L / 4))
    ratio = mpmath.exp(-2 * r) * mpmath.sqrt(pm)
    return ProofParameters(
        float(p), h, r, convexity_check(h, r), ratio, constant_K() * pm ** mpf("0.25") / (2 * E2)
    )


@_precise
def theorem1_contradiction_gap(p) -> mpf:
    """(2e^2 log p - 2)^(1/2) p^(1/2) - 1 - 12 p^(1/4) log p; positive for p >= 10^7."""
    pm = mpf(p)
    L = mpmath.log(pm)
    return mpmath.sqrt(2 * mpmath.e**2 * L - 2) * mpmath.sqrt(pm) - 1 - 12 * pm ** mpf("0.25") * L
