import cmath
import math
import random
from fractions import Fraction

import pytest

from q2audit.arith import sieve
from q2audit.burgess import (
    admissible_h,
    burgess_sum,
    character_values,
    check_almost_constant,
    check_interval_disjoint,
    coprime_pairs,
    find_proposition_instances,
    instances_for_prime,
    interval_partial_sum,
    intervals,
    lemma1c_upper,
    proposition_lower,
    verify_hypothesis,
    window_sums,
)
from q2audit.characters import character, enumerate_characters, quadratic_character
from q2audit.errors import DomainError, HypothesisError
from q2audit.nonresidues import least_nonresidues

# Regression value: instances emitted over quadratic characters mod p <= 1e5.
QUADRATIC_INSTANCES_1E5 = 7216


def brute_S(chi, h, r, start=1):
    """Direct double loop with per-term complex exponentials."""
    p = chi.p
    total = 0.0
    for x in range(p):
        s = 0j
        for m in range(start, start + h):
            n = (x + m) % p
            if n:
                s += cmath.exp(2j * math.pi * chi.c * chi.table[n] / (p - 1))
        total += abs(s) ** (2 * r)
    return total


def test_burgess_examples():
    chi = quadratic_character(5)
    assert burgess_sum(chi, 1, 1) == 4
    assert burgess_sum(chi, 2, 1) == 6


def test_burgess_brute_force():
    for p in (5, 7, 11, 13):
        for chi in enumerate_characters(p):
            for h in (1, 2, 3, 5, p + 2):
                for r in (1, 2):
                    assert burgess_sum(chi, h, r) == pytest.approx(brute_S(chi, h, r), rel=1e-10)


def test_shift_invariance():
    rng = random.Random(1)
    for p in (31, 101, 257):
        for c in rng.sample(range(1, p - 1), 5):
            chi = character(p, c)
            for h in (2, 7, 12):
                r = rng.choice((1, 2, 3))
                assert burgess_sum(chi, h, r, start=0) == pytest.approx(burgess_sum(chi, h, r), rel=1e-9)


def test_window_sum_definition():
    chi = quadratic_character(7)
    vals = character_values(chi)
    w = window_sums(vals, 3)
    assert w.tolist() == [sum(int(vals[(x + m) % 7]) for m in (1, 2, 3)) for x in range(7)]
    with pytest.raises(DomainError):
        window_sums(vals, 0)


def test_lemma1c_examples():
    assert float(lemma1c_upper(5, 2, 1)) == pytest.approx(10 + 4 * math.sqrt(5))
    assert float(lemma1c_upper(5, 1, 1)) == pytest.approx(5 + math.sqrt(5))
    assert lemma1c_upper(5, 1, 1) > burgess_sum(quadratic_character(5), 1, 1)
    p, h, r = 101, 5, 3
    second = lambda hh: lemma1c_upper(p, hh, r) - mpf_first(p, hh, r)
    assert second(2 * h) / second(h) == pytest.approx(2 ** (2 * r))


def mpf_first(p, h, r):
    return Fraction((4 * r) ** r * p * h**r, 4).__float__()


def test_intervals_examples():
    iv = intervals(1, 0, 101, 10, 2)
    assert iv.I == (0, 10) and iv.I_star == (0, 8)
    assert iv.J == (-10, 0)
    assert not iv.starred_empty
    assert intervals(5, 1, 101, 10, 2).starred_empty
    assert list(iv.I_star_points()) == list(range(1, 9))
    assert list(iv.J_star_points()) == list(range(-10, -2))
    with pytest.raises(DomainError):
        intervals(3, 3, 101, 10, 2)


def test_coprime_pairs_count():
    assert list(coprime_pairs(3)) == [(1, 0), (2, 1), (3, 1), (3, 2)]
    assert list(coprime_pairs(Fraction(5, 2), u=2)) == [(1, 0)]


def test_disjoint_examples():
    res = check_interval_disjoint(3, 10, 101)
    assert res.passed and res.count == 4
    assert check_interval_disjoint(1.5, 10, 101).count == 1
    with pytest.raises(DomainError):
        check_interval_disjoint(1.2, 10, 11)


def test_disjoint_random_grid_matches_brute():
    rng = random.Random(7)
    primes = sieve(5000).primes.tolist()[10:]
    for _ in range(60):
        p = rng.choice(primes)
        H = rng.randint(2, 60)
        Xmax = (p - 1) / H
        if Xmax <= 1.01:
            continue
        X = rng.uniform(1.01, min(Xmax, 14))
        fast = check_interval_disjoint(X, H, p)
        assert fast.passed
        assert check_interval_disjoint(X, H, p, brute=True).passed


def test_disjoint_detects_overlap_when_precondition_dropped():
    # with XH >= p the family can overlap; the brute checker sees it if called directly
    from q2audit.burgess import IntervalSpec, _overlap_open_closed

    a = IntervalSpec(1, 0, 11, 10, 0).I
    b = IntervalSpec(2, 1, 11, 10, 0).I
    assert _overlap_open_closed(a, b)


def find_q1_3_q2_ge_11(limit=5000):
    for p in sieve(limit).primes.tolist()[3:]:
        if p % 8 in (1, 7):
            q = least_nonresidues(quadratic_character(p), 2)
            if q[0] == 3 and q[1] >= 11:
                return p, q
    raise AssertionError("no such prime")


def test_instance_example_q1_3():
    p, (q1, q2) = find_q1_3_q2_ge_11()
    chi = quadratic_character(p, mode="quadratic")
    assert verify_hypothesis(chi, 3, q2 - 1)
    insts = instances_for_prime(p, "quadratic")
    assert any(i.u == 3 and i.H == q2 - 1 and i.h == 3 for i in insts)


def test_no_instances_when_q1_is_2():
    for p in sieve(3000).primes.tolist()[3:]:
        chi = quadratic_character(p)
        if least_nonresidues(chi, 1) == [2]:
            assert instances_for_prime(p, "quadratic") == []
    assert admissible_h(1000, 2, 50) == []


def test_almost_constant_vacuous_small_h():
    p, (q1, q2) = find_q1_3_q2_ge_11()
    chi = quadratic_character(p)
    for h in (1, 2):
        assert check_almost_constant(chi, 3, q2 - 1, h, 1, 0).passed


def test_almost_constant_on_instances():
    for inst in find_proposition_instances(3000, "quadratic"):
        X = Fraction(inst.H, 2 * inst.h)
        for q, t in coprime_pairs(X, inst.u):
            res = check_almost_constant(inst.chi, inst.u, inst.H, inst.h, q, t)
            assert res.passed and res.points > 0


def test_almost_constant_hypothesis_error():
    chi = quadratic_character(7)
    with pytest.raises(HypothesisError):
        check_almost_constant(chi, 3, 6, 3, 1, 0)
    with pytest.raises(HypothesisError):
        check_almost_constant(chi, 3, 2, 4, 1, 0)
    with pytest.raises(HypothesisError):
        check_almost_constant(chi, 3, 2, 3, 3, 1)


def test_proposition_lower_degenerate():
    lo = proposition_lower(101, 2, 1, 3, 10)
    assert lo.lower_intermediate == 0 and lo.lower_full == 0
    lo = proposition_lower(1009, 3, 1, 3, 20)
    assert lo.lower_full < 0  # f(X,u) < 0 at small X
    assert lo.flags.all


def test_proposition_chain_on_instances():
    n = 0
    for inst in find_proposition_instances(20000, "quadratic"):
        vals = character_values(inst.chi)
        w0 = window_sums(vals, inst.h, start=0)
        for r in (1, 2):
            S = burgess_sum(inst.chi, inst.h, r, vals)
            lo = proposition_lower(inst.chi.p, inst.h, r, inst.u, inst.H)
            part, distinct = interval_partial_sum(w0, inst.chi.p, inst.u, inst.H, inst.h, r)
            assert lo.flags.all
            assert S >= part >= lo.lower_intermediate
            assert lo.lower_intermediate >= lo.lower_full
            assert distinct
        n += 1
    assert n > 0


def test_instance_count_regression():
    assert sum(1 for _ in find_proposition_instances(10**5, "quadratic")) == QUADRATIC_INSTANCES_1E5


def test_all_scope_includes_quadratic_instances():
    allp = {(i.chi.p, i.h) for i in find_proposition_instances(2000, "all") if i.chi.c == (i.chi.p - 1) // 2}
    quad = {(i.chi.p, i.h) for i in find_proposition_instances(2000, "quadratic")}
    assert allp == quad
