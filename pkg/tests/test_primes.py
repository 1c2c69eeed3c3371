import random

import numpy as np
import pytest

from divperiod import InvalidArgument, build_table, factorize, is_prime, nth_prime
from divperiod.errors import ResourceLimit


def test_build_table_small():
    t = build_table(10)
    assert t.primes.tolist() == [2, 3, 5, 7]


def test_build_table_boundary():
    t = build_table(2)
    assert t.primes.tolist() == [2]


def test_build_table_rejects_bad_limit():
    with pytest.raises(InvalidArgument):
        build_table(1)


def test_table_invariants():
    t = build_table(10_000)
    primes = t.primes.tolist()
    assert primes == sorted(primes)
    assert len(set(primes)) == len(primes)
    assert all(is_prime(p) for p in primes)
    spf = t.smallest_factor
    prime_set = set(primes)
    for i in range(2, 10_001):
        assert i % int(spf[i]) == 0
        assert (int(spf[i]) == i) == (i in prime_set)


def test_prime_count_cross_check():
    # table membership must agree with Miller-Rabin on a random sample
    t = build_table(5_000_000)
    in_table = np.zeros(5_000_001, dtype=bool)
    in_table[t.primes] = True
    rng = random.Random(20240817)
    sample = [rng.randrange(2, 5_000_001) for _ in range(2_000)]
    assert sum(bool(in_table[n]) for n in sample) == sum(is_prime(n) for n in sample)


def test_nth_prime_small():
    assert nth_prime(1) == 2
    assert nth_prime(2) == 3
    assert nth_prime(8) == 19


def test_nth_prime_rejects_zero():
    with pytest.raises(InvalidArgument):
        nth_prime(0)


def test_nth_prime_monotone_and_bounded():
    prev = 1
    for i in range(1, 10_001):
        p = nth_prime(i)
        assert p > prev
        if i < 64:
            assert p <= 2**i
        prev = p


def test_factorize_examples():
    assert factorize(5040).factors == ((2, 4), (3, 2), (5, 1), (7, 1))
    assert factorize(1).factors == ()
    assert is_prime(9973)
    assert factorize(9973).factors == ((9973, 1),)


def test_factorize_rejects_zero():
    with pytest.raises(InvalidArgument):
        factorize(0)


def test_factorize_round_trip():
    for n in range(2, 100_001):
        assert factorize(n).value() == n


def test_factorize_matches_trial_division():
    t = build_table(1_000_000)
    rng = random.Random(7)
    for _ in range(1_000):
        n = rng.randrange(2, 1_000_001)
        m = n
        expect = []
        p = 2
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                expect.append((p, e))
            p += 1
        if m > 1:
            expect.append((m, 1))
        assert factorize(n, table=t).factors == tuple(expect)


def test_factorize_beyond_table():
    # trial division path: value above any default sieve
    n = 10_000_019 * 4  # 10_000_019 is prime
    fi = factorize(n)
    assert fi.value() == n
    with pytest.raises(InvalidArgument):
        factorize(2**64)


def test_factorize_large_semiprime_rejected():
    p = 2_147_483_647  # both factors above the trial-division bound
    with pytest.raises(ResourceLimit):
        factorize(p * (p - 18))  # p-18 = 2147483629 is also prime
