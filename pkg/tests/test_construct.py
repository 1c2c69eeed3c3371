import numpy as np
import pytest

from divperiod import (
    FactoredInt,
    InvalidArgument,
    canonical_preimage,
    chain,
    exact_min_with_divisors,
    factorize,
    min_with_period,
    naive_preimage,
    period,
    period_table,
)

L = FactoredInt(((2, 6), (3, 4), (5, 2), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1)))


def test_canonical_preimage_examples():
    assert canonical_preimage(factorize(5040)) == L
    assert canonical_preimage(factorize(12)) == factorize(60)
    assert canonical_preimage(factorize(4)) == factorize(6)
    assert canonical_preimage(factorize(16)) == factorize(210)


def test_canonical_preimage_rejects_one():
    with pytest.raises(InvalidArgument):
        canonical_preimage(FactoredInt())


def test_naive_preimage_examples():
    assert naive_preimage(factorize(6)) == factorize(18)
    assert naive_preimage(factorize(2)) == factorize(2)
    assert naive_preimage(factorize(12)) == factorize(72)
    with pytest.raises(InvalidArgument):
        naive_preimage(FactoredInt())


def test_round_trips():
    for n in range(2, 10_001):
        fi = factorize(n)
        assert canonical_preimage(fi).divisor_count() == n
        assert naive_preimage(fi).divisor_count() == n


def test_canonical_exponents_non_increasing():
    for n in range(2, 2_001):
        out = canonical_preimage(factorize(n))
        exps = [e for _, e in out.factors]
        assert exps == sorted(exps, reverse=True)
        assert [p for p, _ in out.factors] == [
            int(q) for q in _first_primes(len(exps))
        ]


def _first_primes(count):
    from divperiod import nth_prime

    return [nth_prime(i) for i in range(1, count + 1)]


def test_oracle_examples():
    assert exact_min_with_divisors(16) == factorize(120)
    assert exact_min_with_divisors(2) == factorize(2)
    assert exact_min_with_divisors(4) == factorize(6)
    assert exact_min_with_divisors(1) == FactoredInt()
    with pytest.raises(InvalidArgument):
        exact_min_with_divisors(0)


def test_oracle_matches_paper_value_at_5040():
    # the greedy construction and the exhaustive search agree here
    assert exact_min_with_divisors(5040) == L


def test_theorem1_gap_regression():
    # the greedy construction is NOT minimal for every target: 120 < 210
    assert canonical_preimage(factorize(16)).to_decimal() == "210"
    assert exact_min_with_divisors(16).to_decimal() == "120"


def test_oracle_against_sieve():
    table = period_table(10_000_000)
    d = table.divisor_of[1:]
    values, first_idx = np.unique(d, return_index=True)
    sieve_min = {int(v): int(i) + 1 for v, i in zip(values, first_idx)}
    for t in range(2, 101):
        if t in sieve_min:
            assert exact_min_with_divisors(t).to_decimal() == str(sieve_min[t])


def test_oracle_dominates_constructions():
    for t in range(2, 2_001):
        fi = factorize(t)
        oracle = exact_min_with_divisors(t)
        assert oracle.compare(canonical_preimage(fi)) <= 0
        assert oracle.compare(naive_preimage(fi)) <= 0


def test_period_increment_property():
    for n in range(3, 5_041):
        pre = canonical_preimage(factorize(n))
        value = pre.value()
        if value >= 2**63:
            continue
        assert period(value) == period(n) + 1


def test_min_with_period_sieve_cases():
    rec = min_with_period(5, 10_000)
    assert rec.decimal == "60" and rec.verification == "sieve-verified"
    rec = min_with_period(1, 10_000)
    assert rec.decimal == "2" and rec.verification == "sieve-verified"


def test_min_with_period_oracle_case():
    rec = min_with_period(7, 6_000)
    assert rec.decimal == "293318625600"
    assert rec.digit_count == 12
    assert rec.verification == "oracle-verified-up-to-bound(6000)"


def test_min_with_period_not_found():
    assert min_with_period(8, 6_000) is None


def test_chain():
    records = chain(6, candidate_bound=6_000)
    assert [r.decimal for r in records] == ["2", "4", "6", "12", "60", "5040"]
    assert all(r.verification == "sieve-verified" for r in records)
    assert [r.canonical_match for r in records] == [None, None, True, True, True, True]


def test_chain_base_case():
    records = chain(1, candidate_bound=100)
    assert [r.decimal for r in records] == ["2"]


def test_chain_to_seven():
    records = chain(7, candidate_bound=6_000)
    last = records[-1]
    assert last.decimal == "293318625600"
    assert last.digit_count == 12
    assert last.value == L
    assert last.canonical_match is True


def test_chain_records_reach_two():
    # applying d period-many times to each record's value must land on 2
    for rec in chain(7, candidate_bound=6_000):
        m = rec.value.value()
        for _ in range(rec.period):
            m = factorize(m).divisor_count()
        assert m == 2
