"""Sweeps, spot checks and single-case re-runs.

Each check has a single-case function returning an :class:`AuditRecord`;
sweeps are loops over those (or over vectorised equivalents that produce the
same numbers), so any record can be recomputed in isolation with
:func:`run_case`.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import mpmath
import numpy as np

from . import analytic
from .arith import cached_index_table, cached_sieve, divisors, euler_phi, next_prime, phi_table
from .burgess import (
    Instance,
    _power_sum,
    burgess_sum,
    character_values,
    check_almost_constant,
    check_interval_disjoint,
    coprime_pairs,
    instances_for_prime,
    interval_partial_sum,
    lemma1c_upper,
    proposition_lower,
    window_sums,
)
from .characters import CharacterSpec, character, enumerate_characters, max_partial_sum, order, quadratic_character
from .errors import DomainError
from .nonresidues import hudson_check, least_nonresidues, order_profile, restricted_nonresidue
from .records import AuditRecord, Report

LEMMA1C_TOL = 1e-9  # relative
PROPOSITION_TOL = 1e-6  # absolute
TABLE1_TOL = 2e-4


@dataclass
class SweepConfig:
    p_min: int = 5
    p_max: int = 300
    scope: str = "all"
    h_set: tuple[int, ...] = tuple(range(1, 13))
    r_set: tuple[int, ...] = (1, 2, 3)
    tolerance: float | None = None
    fmt: str = "jsonl"
    jobs: int = 1
    seed: int = 0
    timing: bool = False
    granularity: str = "worst"
    samples: int = 100
    p0: int = 10**7
    sample_lo: int = 10**7
    sample_hi: int = 10**9

    def __post_init__(self):
        if self.scope not in ("all", "quadratic"):
            raise DomainError(f"scope must be 'all' or 'quadratic', got {self.scope!r}")
        if self.p_min > self.p_max:
            raise DomainError("p_min > p_max")
        if self.jobs < 1:
            raise DomainError("jobs must be >= 1")
        if self.granularity not in ("worst", "full"):
            raise DomainError("granularity must be 'worst' or 'full'")

    def tol(self, default: float) -> float:
        return default if self.tolerance is None else self.tolerance


def _primes(lo: int, hi: int) -> list[int]:
    return [int(p) for p in cached_sieve(max(hi, 2)).primes_upto(hi) if p >= lo]


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    """Order-preserving map, so output never depends on the worker count."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def _char(p: int, c: int | None, mode: str) -> CharacterSpec:
    if mode == "quadratic":
        return quadratic_character(p, mode="quadratic")
    return character(p, c)


def _ident(chi: CharacterSpec) -> dict:
    return {"p": chi.p, "c": chi.c, "mode": chi.mode, "order": order(chi)}


# -- C(p0) table ---------------------------------------------------------------


def table1_case(p0: int, tolerance: float = TABLE1_TOL) -> AuditRecord:
    k = round(math.log10(p0))
    golden = float(analytic.TABLE1[k])
    got = analytic.constant_C(p0)
    diff = abs(got - golden)
    raw = analytic.constant_C_raw(p0)
    return AuditRecord(
        "table1", p=p0, value=got, bound=golden, margin=-diff, tolerance=tolerance,
        passed=diff <= tolerance, note=f"unrounded={mpmath.nstr(raw, 12)}; exact_match={got == golden}",
    )


def run_table1(tolerance: float = TABLE1_TOL) -> Report:
    t0 = time.perf_counter()
    recs = [table1_case(10**k, tolerance) for k in sorted(analytic.TABLE1)]
    vals = [r.value for r in recs]
    steps = [a - b for a, b in zip(vals, vals[1:])]
    recs.append(_strict_lower("table1_monotone", min(steps), 0.0, note="min C(10^k) - C(10^(k+1))"))
    return Report("table1", recs, time.perf_counter() - t0)


def _strict_lower(check: str, value, bound, **kw) -> AuditRecord:
    rec = AuditRecord.lower(check, value, bound, **kw)
    rec.passed = rec.margin > 0
    return rec


def _strict_upper(check: str, value, bound, **kw) -> AuditRecord:
    rec = AuditRecord.upper(check, value, bound, **kw)
    rec.passed = rec.margin > 0
    return rec


# -- upper bound on S ------------------------------------------------------------


def lemma1c_case(p: int, c: int | None, mode: str, h: int, r: int, rel_tol: float = LEMMA1C_TOL) -> AuditRecord:
    chi = _char(p, c, mode)
    S = burgess_sum(chi, h, r)
    bound = lemma1c_upper(p, h, r)
    return AuditRecord.upper("lemma1c", S, bound, float(rel_tol * bound), h=h, r=r, **_ident(chi))


def _lemma1c_prime(args) -> list[AuditRecord]:
    p, cfg = args
    rel = cfg.tol(LEMMA1C_TOL)
    chars = enumerate_characters(p) if cfg.scope == "all" else [quadratic_character(p)]
    bounds = {(h, r): lemma1c_upper(p, h, r) for h in cfg.h_set for r in cfg.r_set}
    out: list[AuditRecord] = []
    for chi in chars:
        t0 = time.perf_counter()
        vals = character_values(chi)
        recs = []
        for h in cfg.h_set:
            w = window_sums(vals, h)
            for r in cfg.r_set:
                b = bounds[h, r]
                recs.append(AuditRecord.upper("lemma1c", _power_sum(w, r), b, float(rel * b), h=h, r=r, **_ident(chi)))
        if cfg.granularity == "worst":
            worst = min(recs, key=lambda x: (x.margin / x.bound, x.h, x.r))
            worst.note = f"worst of {len(recs)} (h,r) cases; all_passed={all(x.passed for x in recs)}"
            worst.passed = all(x.passed for x in recs)
            recs = [worst]
        if cfg.timing:
            for x in recs:
                x.elapsed = time.perf_counter() - t0
        out.extend(recs)
    return out


def run_sweep_lemma1c(cfg: SweepConfig) -> Report:
    t0 = time.perf_counter()
    primes = _primes(max(cfg.p_min, 5), cfg.p_max)
    recs = [r for chunk in _pmap(_lemma1c_prime, [(p, cfg) for p in primes], cfg.jobs) for r in chunk]
    return Report("lemma1c", recs, time.perf_counter() - t0)


# -- Hudson's lemma ---------------------------------------------------------------


def _hudson_record(p: int, c: int, mode: str, d: int, q1: int, q2: int, S: int, count: int) -> AuditRecord:
    bound = S * q1 + 1
    vacuous = (q1, q2) == (2, 3)
    rec = AuditRecord.upper("hudson", q2, bound, p=p, c=c, mode=mode, order=d, u=q1, H=S,
                            note=f"q1={q1} q2={q2} S={S} characters={count}" + ("; vacuous" if vacuous else ""))
    if vacuous:
        rec.passed = True
    return rec


def hudson_case(p: int, c: int | None, mode: str) -> AuditRecord:
    """Per-character reference path (no order shortcut)."""
    chi = _char(p, c, mode)
    res = hudson_check(chi)
    d = order(chi)
    return _hudson_record(p, chi.c, chi.mode, d, res.q1, res.q2, res.S, euler_phi(d) if mode == "tabled" else 1)


def _hudson_prime(args) -> list[AuditRecord]:
    p, cfg = args
    t0 = time.perf_counter()
    if cfg.scope == "quadratic":
        recs = [hudson_case(p, (p - 1) // 2, "tabled")]
    else:
        table = cached_index_table(p)
        primes = cached_sieve(max(cfg.p_max, 5)).primes_upto(p - 1)
        recs = []
        for d in divisors(p - 1)[1:]:
            prof = order_profile(table.ind, p, d, primes)
            # c = (p-1)/d is the smallest exponent index of order d
            recs.append(_hudson_record(p, (p - 1) // d, "tabled", d, prof.q[0], prof.q[1], prof.S, prof.count))
    if cfg.timing:
        for x in recs:
            x.elapsed = time.perf_counter() - t0
    return recs


def run_sweep_hudson(cfg: SweepConfig) -> Report:
    t0 = time.perf_counter()
    primes = _primes(max(cfg.p_min, 5), cfg.p_max)
    recs = [r for chunk in _pmap(_hudson_prime, [(p, cfg) for p in primes], cfg.jobs) for r in chunk]
    return Report("hudson", recs, time.perf_counter() - t0)


# -- lower-bound instances ------------------------------------------------------------


def _instance_fields(inst: Instance) -> dict:
    return {**_ident(inst.chi), "u": inst.u, "H": inst.H, "h": inst.h, "X": inst.H / (2 * inst.h)}


def proposition_records(inst: Instance, r_set: Iterable[int], tol: float, vals=None) -> list[AuditRecord]:
    chi, u, H, h = inst.chi, inst.u, inst.H, inst.h
    p = chi.p
    if vals is None:
        vals = character_values(chi)
    w1 = window_sums(vals, h)
    w0 = window_sums(vals, h, start=0)
    base = _instance_fields(inst)
    out: list[AuditRecord] = []
    for r in r_set:
        S = _power_sum(w1, r)
        lo = proposition_lower(p, h, r, u, H)
        premises = "premises_ok" if lo.flags.all else f"premises_failed={lo.flags}"
        out.append(AuditRecord.lower("prop_intermediate", S, lo.lower_intermediate, tol, r=r, **base,
                                     note=f"phi_sum={lo.phi_sum}; {premises}"))
        out.append(AuditRecord.lower("prop_full", S, lo.lower_full, tol, r=r, **base, note=premises))
        part, distinct = interval_partial_sum(w0, p, u, H, h, r)
        chain = AuditRecord.lower("prop_chain", part, lo.lower_intermediate, tol, r=r, **base,
                                  note=f"S={S}; S>=partial={S >= part - tol}; residues_distinct={distinct}")
        chain.passed = chain.passed and S >= part - tol
        out.append(chain)
    out.append(almost_constant_record(inst, vals, w0))
    X = Fraction(H, 2 * h)
    if X * H < p:
        out.append(disjoint_record(p, H, h))
    return out


def almost_constant_record(inst: Instance, vals=None, window=None) -> AuditRecord:
    chi, u, H, h = inst.chi, inst.u, inst.H, inst.h
    if vals is None:
        vals = character_values(chi)
    if window is None:
        window = window_sums(vals, h, start=0)
    X = Fraction(H, 2 * h)
    worst, points, pairs = math.inf, 0, 0
    for q, t in coprime_pairs(X, u):
        res = check_almost_constant(chi, u, H, h, q, t, vals, window, verify=(pairs == 0))
        worst = min(worst, res.min_magnitude)
        points += res.points
        pairs += 1
    return AuditRecord.lower("almost_constant", worst, h - 2, 1e-9, **_instance_fields(inst),
                             note=f"pairs={pairs} points={points}")


def disjoint_record(p: int, H: int, h: int) -> AuditRecord:
    X = Fraction(H, 2 * h)
    res = check_interval_disjoint(X, H, p)
    return AuditRecord("interval_disjoint", p=p, h=h, H=H, X=float(X), value=res.count, passed=res.passed,
                       note="" if res.passed else f"collision={res.collision}")


def proposition_case(p: int, c: int | None, mode: str, h: int, r: int, u: int, H: int, check: str,
                     tol: float = PROPOSITION_TOL) -> AuditRecord:
    chi = _char(p, c, mode)
    recs = proposition_records(Instance(chi, u, H, h), (r,), tol)
    return next(x for x in recs if x.check == check)


def _proposition_prime(args) -> list[AuditRecord]:
    p, cfg = args
    tol = cfg.tol(PROPOSITION_TOL)
    out: list[AuditRecord] = []
    cache: dict[int, np.ndarray] = {}
    for inst in instances_for_prime(p, cfg.scope):
        t0 = time.perf_counter()
        if inst.chi.c not in cache:
            cache[inst.chi.c] = character_values(inst.chi)
        vals = cache[inst.chi.c]
        recs = proposition_records(inst, cfg.r_set, tol, vals)
        if cfg.timing:
            for x in recs:
                x.elapsed = time.perf_counter() - t0
        out.extend(recs)
    return out


def run_sweep_proposition(cfg: SweepConfig) -> Report:
    t0 = time.perf_counter()
    primes = _primes(max(cfg.p_min, 5), cfg.p_max)
    recs = [r for chunk in _pmap(_proposition_prime, [(p, cfg) for p in primes], cfg.jobs) for r in chunk]
    n = len({(r.p, r.c, r.h) for r in recs if r.check == "almost_constant"})
    recs.append(AuditRecord.lower("instance_count", n, 1, note=f"scope={cfg.scope}"))
    return Report("proposition", recs, time.perf_counter() - t0)


# -- analytic grid ------------------------------------------------------------------


def sr1_case(X: float, u: int, prefix=None) -> AuditRecord:
    res = analytic.sr1_decompose(X, u, prefix)
    return _strict_upper("sr1_theta", abs(res.theta), 1, u=u, X=float(X),
                         note=f"exact={res.exact_sum}; main={mpmath.nstr(res.main_term, 15)}")


def phi_sum_case(X: float, u: int, prefix=None) -> AuditRecord:
    res = analytic.phi_sum_coprime(X, u, prefix)
    return AuditRecord.lower("phi_sum", res.exact_sum, res.lower_bound, u=u, X=float(X))


def convexity_case(h: int, r: int, implication: int) -> AuditRecord:
    """Relative slack of one implication at (h, r); vacuous cases pass with margin None."""
    res = analytic.convexity_check(h, r)
    verdict = (res.first, res.second, res.third)[implication - 1]
    if implication == 1:
        lhs = Fraction(1, 2 * h) * Fraction(4 * r, h - 2) ** r if h > 2 else None
        rhs = Fraction(1, h + 1) * Fraction(4 * r, h + 1) ** r
    elif implication == 2:
        lhs = Fraction(h, h - 2) ** r if h > 2 else None
        rhs = Fraction(7, 6)
    else:
        lhs, rhs = Fraction(2 * r - 1, h), Fraction(2 * r, h + 1)
    name = f"convexity_{implication}"
    if verdict == "vacuous":
        return AuditRecord(name, h=h, r=r, passed=True, note="vacuous")
    rec = AuditRecord.upper(name, float(lhs / rhs), 1.0, h=h, r=r, note=verdict)
    rec.passed = verdict == "pass"
    return rec


def _convexity_records(r_max: int = 50, h_max: int = 1000) -> list[AuditRecord]:
    out = []
    for r in range(1, r_max + 1):
        for imp in (1, 2, 3):
            recs = [convexity_case(h, r, imp) for h in range(1, h_max + 1)]
            live = [x for x in recs if x.margin is not None]
            if not live:
                out.append(AuditRecord(f"convexity_{imp}", r=r, passed=True, note="vacuous for all h"))
                continue
            worst = min(live, key=lambda x: x.margin)
            worst.passed = all(x.passed for x in recs)
            worst.note = f"worst of {len(live)} non-vacuous h <= {h_max}"
            out.append(worst)
    return out


def f_increasing_case(u: int, lo: float = 14.0, hi: float = 1e6, points: int = 20000) -> AuditRecord:
    xs = np.geomspace(lo, hi, points)
    fs = [analytic.f(x, u) for x in xs]
    diffs = [b - a for a, b in zip(fs, fs[1:])]
    i = min(range(len(diffs)), key=lambda k: diffs[k])
    return _strict_lower("f_increasing", diffs[i], 0, u=u, X=float(xs[i]),
                         note=f"{points}-point log grid on [{lo:g}, {hi:g}]; f(14)={mpmath.nstr(fs[0], 8)}")


def f_u_monotone_case(X: float) -> AuditRecord:
    us = [89, 97, 101, 103, 107, 109, 113]
    fs = [analytic.f(X, u) for u in us]
    step = min(b - a for a, b in zip(fs, fs[1:]))
    return AuditRecord.lower("f_u_monotone", step, 0, X=float(X), note=f"u in {us}")


def g_decreasing_case(points: int = 100) -> AuditRecord:
    ps = [mpmath.mpf(10) ** e for e in mpmath.linspace(7, 20, points)]
    gs = [analytic.g(p) for p in ps]
    step = min(a - b for a, b in zip(gs, gs[1:]))
    ok_pos = all(x > 0 for x in gs)
    rec = _strict_lower("g_decreasing", step, 0, note=f"{points}-point log grid on [1e7, 1e20]; positive={ok_pos}")
    rec.passed = rec.passed and ok_pos
    return rec


def constants_records() -> list[AuditRecord]:
    K = analytic.constant_K()
    E2 = mpmath.e**2
    out = [
        AuditRecord.upper("K_value", abs(K - mpmath.mpf("6.0385")), mpmath.mpf("5e-5"), note=mpmath.nstr(K, 15)),
        _strict_upper("Kg_1e7", K * analytic.g(10**7), 12),
        _strict_lower("f_limit", analytic.f(10**9, 89), mpmath.mpf("0.999")),
        _strict_upper("g_limit", analytic.g(mpmath.mpf(10) ** 40), mpmath.mpf("1.01")),
        _strict_upper("cor3_large_q1_constant", mpmath.mpf("3.9") * mpmath.mpf("6.1536"), 24),
        _strict_upper("cor3_small_q1_constant", 2 * E2, 15),
        _strict_lower("x_lower_1e7", analytic.proof_parameters(10**7).x_lower, 14),
        _strict_lower("K_vs_28e2", K * mpmath.mpf(10) ** mpmath.mpf(7 / 4), 28 * E2),
        _strict_lower("u_threshold", E2 * mpmath.log(10**5), 83, note="e^2 log 1e5 > 83 forces prime u >= 89"),
    ]
    for rec in out:
        rec.p = 10**7 if rec.check in ("Kg_1e7", "x_lower_1e7", "K_vs_28e2") else rec.p
    return out


def proof_grid_records(points: int = 100) -> list[AuditRecord]:
    exps = mpmath.linspace(7, 20, points)
    ps = [mpmath.mpf(10) ** e for e in exps]
    gaps = [analytic.theorem1_contradiction_gap(p) for p in ps]
    i = min(range(points), key=lambda k: gaps[k])
    out = [_strict_lower("theorem1_gap", gaps[i], 0, X=float(ps[i]), note="min over log grid [1e7, 1e20]")]
    params = [analytic.proof_parameters(p) for p in ps]
    hyp = [pp.h - (16 * pp.r + 2) for pp in params]
    j = min(range(points), key=lambda k: hyp[k])
    ok = all(pp.h >= 6 * pp.r + 5 and pp.h >= 2 * pp.r - 1 and pp.convexity.passed for pp in params)
    rec = AuditRecord.lower("proof_hr_hypotheses", params[j].h, 16 * params[j].r + 2, h=params[j].h, r=params[j].r,
                            X=float(ps[j]), note=f"all three implications applicable and true: {ok}")
    rec.passed = rec.passed and ok
    out.append(rec)
    ratios = [pp.exponent_ratio for pp in params]
    k = max(range(points), key=lambda n: ratios[n])
    out.append(AuditRecord.upper("proof_exponent_step", ratios[k], 1, informational=True, h=params[k].h,
                                 r=params[k].r, X=float(ps[k]),
                                 note="(4B/A)^r p^(1/2) with r = floor(log(p)/4); max over grid"))
    ms = [mpmath.mpf(10) ** e for e in mpmath.linspace(15, 40, points)]
    pv = [analytic.pv_q2_bound(m) for m in ms]
    n = min(range(points), key=lambda q: pv[q][1] - pv[q][0])
    out.append(AuditRecord.upper("pv_q2_simplify", pv[n][0], pv[n][1], X=float(ms[n]),
                                 note="raw <= 2 m^(1/2) log m on log grid [1e15, 1e40]"))
    cps = [mpmath.mpf(10) ** e for e in mpmath.linspace(19, 40, points)]
    c2 = [analytic.cor2_bound(p) - (analytic.consecutive_bound(p) * analytic.hypothesis_threshold(p) + 1) for p in cps]
    m = min(range(points), key=lambda q: c2[q])
    out.append(_strict_lower("cor2_combination", c2[m], 0, X=float(cps[m]),
                             note="53 p^(1/4) log^2 p - (7.1 p^(1/4) log p * e^2 log p + 1)"))
    return out


def pv_empirical_records(p_max: int = 300) -> list[AuditRecord]:
    out = []
    for p in _primes(5, p_max):
        worst = max((max_partial_sum(chi), chi.c) for chi in enumerate_characters(p))
        out.append(AuditRecord.upper("pv_empirical", worst[0], analytic.polya_vinogradov(p), p=p, c=worst[1],
                                     mode="tabled", informational=True,
                                     note="max |partial sum| over all characters (cited inequality, informational)"))
    return out


def analytic_grid(seed: int, n_per_u: int = 400) -> list[tuple[float, int]]:
    rng = random.Random(seed)
    us = [int(q) for q in cached_sieve(97).primes]
    grid = []
    for u in us:
        for i in range(n_per_u):
            X = float(rng.randint(2, 10**4)) if i % 4 == 0 else rng.uniform(1.0, 1e4)
            grid.append((X if X > 1 else 1.5, u))
    return grid


def run_sweep_analytic(cfg: SweepConfig) -> Report:
    t0 = time.perf_counter()
    grid = analytic_grid(cfg.seed)
    recs: list[AuditRecord] = []
    phi = phi_table(10**4)
    prefixes = {u: (analytic.coprime_prefix_sums(10**4, u), analytic.coprime_phi_prefix(10**4, u, phi))
                for u in sorted({u for _, u in grid})}
    for X, u in grid:
        sp, pp = prefixes[u]
        recs.append(sr1_case(X, u, sp))
        recs.append(phi_sum_case(X, u, pp))
    recs.extend(_convexity_records())
    recs.extend(f_increasing_case(u) for u in (89, 97, 101))
    recs.extend(f_u_monotone_case(X) for X in (1.5, 2.0, 14.0, 100.0, 1e4, 1e6))
    recs.append(g_decreasing_case())
    recs.extend(constants_records())
    recs.extend(proof_grid_records())
    recs.extend(pv_empirical_records(min(cfg.p_max, 300)))
    return Report("analytic", recs, time.perf_counter() - t0)


# -- large-p spot check -------------------------------------------------------------


def sample_primes(n: int, lo: int, hi: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    out: set[int] = set()
    while len(out) < n:
        p = next_prime(rng.randint(lo, hi))
        if p <= hi:
            out.add(p)
    return sorted(out)


def spotcheck_records(p: int, p0: int) -> list[AuditRecord]:
    chi = quadratic_character(p, mode="quadratic")
    q1, q2 = least_nonresidues(chi, 2)
    thr = analytic.hypothesis_threshold(p)
    base = {"p": p, "c": chi.c, "mode": chi.mode, "order": 2, "X": float(p0)}
    C_bound = analytic.theorem1_bound(p, p0)
    if q1 > thr:
        cor1 = AuditRecord.upper("cor1", q2, C_bound, u=q1, note="hypothesis q1 > e^2 log p met", **base)
    else:
        cor1 = AuditRecord.upper("cor1", q2, C_bound, u=q1, informational=True,
                                 note=f"hypothesis not met: q1={q1} <= e^2 log p={mpmath.nstr(thr, 6)}", **base)
        cor1.passed = True
    u = next_prime(int(mpmath.floor(thr)) + 1)
    n0 = restricted_nonresidue(chi, u, search_limit=10**6)
    out = [
        cor1,
        AuditRecord.upper("theorem1_n0", n0, C_bound, u=u, note="u = least prime >= e^2 log p", **base),
        AuditRecord.upper("norton", q1, analytic.norton_bound(p), u=q1, informational=True, **base),
        AuditRecord.upper("cor2_info", q2, analytic.cor2_bound(p), u=q1, informational=True,
                          note="p below 1e19: outside the corollary's range", **base),
        AuditRecord.upper("pv_q2_info", q2, analytic.pv_q2_bound(p)[1], u=q1, informational=True,
                          note="m below 1e15: outside the lemma's range", **base),
    ]
    return out


def run_spotcheck_quadratic(cfg: SweepConfig) -> Report:
    if cfg.p0 < 10**7 or cfg.sample_lo < cfg.p0:
        raise DomainError("need sample_lo >= p0 >= 1e7")
    t0 = time.perf_counter()
    primes = sample_primes(cfg.samples, cfg.sample_lo, cfg.sample_hi, cfg.seed)
    recs = [r for p in primes for r in spotcheck_records(p, cfg.p0)]
    met = sum(1 for r in recs if r.check == "cor1" and not r.informational)
    recs.append(AuditRecord("hypothesis_tally", value=met, bound=len(primes), informational=True,
                            note=f"{met} of {len(primes)} samples have q1 > e^2 log p"))
    return Report("spotcheck", recs, time.perf_counter() - t0)


# -- single-case re-run -----------------------------------------------------------


def run_case(rec: AuditRecord) -> AuditRecord:
    """Recompute one record from its inputs."""
    ch = rec.check
    if ch == "table1":
        return table1_case(rec.p, rec.tolerance)
    if ch == "lemma1c":
        rel = rec.tolerance / rec.bound if rec.bound else LEMMA1C_TOL
        return lemma1c_case(rec.p, rec.c, rec.mode, rec.h, rec.r, rel)
    if ch == "hudson":
        return hudson_case(rec.p, rec.c, rec.mode)
    if ch in ("prop_intermediate", "prop_full", "prop_chain"):
        return proposition_case(rec.p, rec.c, rec.mode, rec.h, rec.r, rec.u, rec.H, ch, rec.tolerance)
    if ch == "almost_constant":
        return almost_constant_record(Instance(_char(rec.p, rec.c, rec.mode), rec.u, rec.H, rec.h))
    if ch == "interval_disjoint":
        return disjoint_record(rec.p, rec.H, rec.h)
    if ch == "sr1_theta":
        return sr1_case(rec.X, rec.u)
    if ch == "phi_sum":
        return phi_sum_case(rec.X, rec.u)
    if ch.startswith("convexity_") and rec.h is not None:
        return convexity_case(rec.h, rec.r, int(ch[-1]))
    if ch == "f_increasing":
        return f_increasing_case(rec.u)
    if ch == "f_u_monotone":
        return f_u_monotone_case(rec.X)
    if ch == "g_decreasing":
        return g_decreasing_case()
    if ch in ("cor1", "theorem1_n0", "norton", "cor2_info", "pv_q2_info"):
        return next(x for x in spotcheck_records(rec.p, int(rec.X)) if x.check == ch)
    if ch == "pv_empirical":
        return next(x for x in pv_empirical_records(rec.p) if x.p == rec.p)
    for group in (constants_records, proof_grid_records):
        for x in group():
            if x.check == ch:
                return x
    raise DomainError(f"no single-case runner for check {ch!r}")
