import pytest

from q2audit.arith import cached_index_table, divisors, sieve
from q2audit.characters import character, enumerate_characters, evaluate, order, quadratic_character
from q2audit.errors import DomainError, SearchLimitError
from q2audit.nonresidues import (
    hudson_check,
    least_nonresidues,
    max_constant_run,
    order_profile,
    report,
    restricted_nonresidue,
    restricted_nonresidue_by_order,
)

PRIMES = sieve(10**4).primes.tolist()


def euler_legendre(a, p):
    e = pow(a, (p - 1) // 2, p)
    return 0 if e == 0 else (1 if e == 1 else -1)


def brute_run(chi):
    vals = [evaluate(chi, n) for n in range(1, chi.p)]
    best = cur = 1
    for a, b in zip(vals, vals[1:]):
        cur = cur + 1 if a == b else 1
        best = max(best, cur)
    return best


def test_least_nonresidues_examples():
    assert least_nonresidues(quadratic_character(7), 2) == [3, 5]
    q71 = [q for q in (2, 3, 5, 7, 11, 13) if euler_legendre(q, 71) == -1][:2]
    assert q71 == [7, 11]
    assert least_nonresidues(quadratic_character(71, mode="quadratic"), 2) == q71


def test_least_nonresidues_errors():
    with pytest.raises(DomainError):
        least_nonresidues(quadratic_character(7), 0)
    with pytest.raises(SearchLimitError):
        least_nonresidues(quadratic_character(71), 1, search_limit=5)


def test_restricted_examples():
    chi = quadratic_character(7)
    assert restricted_nonresidue(chi, 3) == 5
    assert restricted_nonresidue(chi, 5) == 3


def test_restricted_equals_q2_when_composites_are_residues():
    for p in PRIMES[2:300]:
        chi = quadratic_character(p)
        q1, q2 = least_nonresidues(chi, 2)
        n0 = restricted_nonresidue(chi, q1)
        between = [n for n in range(q1 + 1, q2) if n % q1 and not evaluate(chi, n).is_one]
        if not between:
            assert n0 == q2
        assert n0 <= q2


def test_restricted_le_q1_when_u_avoids_q1():
    for p in PRIMES[2:150]:
        for chi in enumerate_characters(p)[:20]:
            (q1,) = least_nonresidues(chi, 1)
            for u in (2, 3, 5, 7, 11, 13):
                if q1 % u:
                    assert restricted_nonresidue(chi, u) <= q1


def test_max_constant_run_examples():
    assert max_constant_run(quadratic_character(7)) == 2
    assert max_constant_run(quadratic_character(5)) == 2  # +,-,-,+
    assert max_constant_run(character(3, 1)) == 1


def test_max_constant_run_brute():
    for p in PRIMES[1:40]:
        for chi in enumerate_characters(p):
            assert max_constant_run(chi) == brute_run(chi)


def test_hudson_examples():
    res = hudson_check(quadratic_character(7))
    assert (res.q1, res.q2, res.S, res.bound, res.margin, res.passed) == (3, 5, 2, 7, 2, True)
    assert hudson_check(character(5, 1)).vacuous
    r71 = hudson_check(quadratic_character(71))
    assert r71.passed and r71.S >= 2 and r71.q2 == 11


def test_hudson_needs_p5():
    with pytest.raises(DomainError):
        hudson_check(character(3, 1))


def test_order_shortcut_matches_per_character():
    for p in PRIMES[2:70]:
        table = cached_index_table(p)
        primes = sieve(p).primes
        primes = primes[primes < p]
        for d in divisors(p - 1)[1:]:
            prof = order_profile(table.ind, p, d, primes)
            chars = [chi for chi in enumerate_characters(p) if order(chi) == d]
            assert len(chars) == prof.count
            for chi in chars:
                assert least_nonresidues(chi, 2) == prof.q
                assert max_constant_run(chi) == prof.S
                u = prof.q[0]
                assert restricted_nonresidue(chi, u) == restricted_nonresidue_by_order(table.ind, p, d, u)


def test_tabled_and_quadratic_agree():
    for p in PRIMES[1:]:
        a = least_nonresidues(quadratic_character(p, mode="tabled"), 2, search_limit=2 * p)
        b = least_nonresidues(quadratic_character(p, mode="quadratic"), 2, search_limit=2 * p)
        assert a == b


def test_report():
    rep = report(quadratic_character(71), us=(7, 2))
    assert rep.q == [7, 11] and rep.n0 == {7: 11, 2: 7} and rep.S >= 2
