import io
import math

import numpy as np
import pytest

from divperiod import (
    BoundParams,
    InvalidArgument,
    factorize,
    histogram,
    max_order_ratio,
    period_table,
    plot_data,
    theorem2_increment,
    wigert_scan,
)
from divperiod.analysis import (
    increment_report_json,
    write_histogram_csv,
    write_plot_csv,
    write_wigert_csv,
)

LN2 = math.log(2)


def test_histogram_small(table_100k):
    h = histogram(table_100k, 2, 12)
    # periods of 2..12 are 1,1,2,1,3,1,3,2,3,1,4 (naive-iteration oracle)
    assert h.counts == {1: 5, 2: 2, 3: 3, 4: 1}
    assert histogram(table_100k, 2, 2).counts == {1: 1}


def test_histogram_total(table_100k):
    for lo, hi in [(2, 12), (2, 100_000), (50, 60), (17, 17)]:
        h = histogram(table_100k, lo, hi)
        assert sum(h.counts.values()) == hi - lo + 1
        assert all(k >= 1 for k in h.counts)


def test_histogram_rejects_bad_range(table_100k):
    with pytest.raises(InvalidArgument):
        histogram(table_100k, 2, 200_000)
    with pytest.raises(InvalidArgument):
        histogram(table_100k, 1, 10)


def test_bound_params_validation():
    with pytest.raises(InvalidArgument):
        BoundParams(epsilon=0.0)
    with pytest.raises(InvalidArgument):
        BoundParams(threshold_n0=0)


def test_max_order_ratio_examples():
    # r(60) exceeds ln 2: the bound is asymptotic, not universal
    assert max_order_ratio(60, 12) == pytest.approx(0.8555071, abs=1e-6)
    assert max_order_ratio(60, 12) > LN2
    assert max_order_ratio(9973, 2) < 0.2


def test_wigert_scan_small(table_100k):
    rep = wigert_scan(table_100k, BoundParams(), 3, 100_000)
    assert rep.max_ratio == max_order_ratio(rep.argmax_n, rep.argmax_d)
    # n = 60 is below threshold_n0, so never a violation
    assert all(n >= 10_000 for n, _, _ in rep.violations)
    for n, d, r in rep.violations:
        assert r > rep.threshold_value
        assert int(table_100k.divisor_of[n]) == d


def test_wigert_prime_ratio_below_ln2(table_100k):
    d = table_100k.divisor_of
    primes = np.flatnonzero(d[: 100_001] == 2)
    primes = primes[primes >= 5]
    n = primes.astype(np.float64)
    r = LN2 * np.log(np.log(n)) / np.log(n)
    assert np.all(r < LN2)


def test_wigert_scan_validates_range(table_100k):
    with pytest.raises(InvalidArgument):
        wigert_scan(table_100k, BoundParams(), 2, 100)
    with pytest.raises(InvalidArgument):
        wigert_scan(table_100k, BoundParams(), 3, 200_000)


def test_increment_examples():
    rep = theorem2_increment(factorize(5040))
    assert rep.delta_log10 == pytest.approx(7.765, abs=1e-3)
    assert rep.bound == pytest.approx(2.18, abs=1e-9)
    assert rep.bound_holds and rep.hypothesis_holds

    rep = theorem2_increment(factorize(12))
    assert rep.delta_log10 == pytest.approx(0.699, abs=1e-3)
    assert rep.bound == pytest.approx(1.09, abs=1e-9)
    assert not rep.bound_holds and not rep.hypothesis_holds

    rep = theorem2_increment(factorize(60))
    assert rep.delta_log10 == pytest.approx(1.924, abs=1e-3)
    assert rep.bound == pytest.approx(1.635, abs=1e-9)
    assert rep.bound_holds and not rep.hypothesis_holds


def test_increment_rejects_below_three():
    with pytest.raises(InvalidArgument):
        theorem2_increment(factorize(1))
    with pytest.raises(InvalidArgument):
        theorem2_increment(factorize(2))


def test_increment_nonnegative():
    for n in range(3, 5_041):
        assert theorem2_increment(factorize(n)).delta_log10 >= 0


def test_increment_json():
    rep = theorem2_increment(factorize(12))
    js = increment_report_json(rep)
    assert set(js) == {"n", "delta_log10", "bound", "hypothesis_holds", "bound_holds"}
    assert js["n"] == "2^2*3"


def test_plot_data(table_100k):
    rows = plot_data(table_100k, 2, 350)
    assert len(rows) == 349
    as_map = dict(rows)
    assert as_map[60] == 5
    assert as_map[2] == 1
    assert max(k for _, k in rows) < 6


def test_csv_writers(table_100k):
    buf = io.StringIO()
    write_histogram_csv(histogram(table_100k, 2, 12), buf)
    assert buf.getvalue().splitlines()[0] == "k,count"

    buf = io.StringIO()
    write_plot_csv(plot_data(table_100k, 2, 10), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,k"
    assert len(lines) == 10

    buf = io.StringIO()
    write_wigert_csv(table_100k, 3, 10, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,d,ratio"
    assert len(lines) == 9
