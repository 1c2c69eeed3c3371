"""Empirical scans: period frequencies, the log10 increment bound for the
canonical preimage, and the maximal-order ratio of d(n).

Everything here reports; nothing asserts an asymptotic claim.  Small-n
violations of the maximal-order bound (n = 60 being the classic one) are
expected and surfaced as data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from .construct import canonical_preimage
from .divisor import PeriodTable
from .errors import InvalidArgument
from .factored import FactoredInt

LN2 = math.log(2.0)


@dataclass(frozen=True)
class Histogram:
    lo: int
    hi: int
    counts: dict[int, int]


def histogram(table: PeriodTable, lo: int, hi: int) -> Histogram:
    """Period-frequency counts over [lo, hi]."""
    if not 2 <= lo <= hi <= table.limit:
        raise InvalidArgument(f"range [{lo}, {hi}] outside table limit {table.limit}")
    bins = np.bincount(table.period_of[lo : hi + 1])
    counts = {k: int(c) for k, c in enumerate(bins) if k >= 1 and c > 0}
    return Histogram(lo, hi, counts)


@dataclass(frozen=True)
class BoundParams:
    """Knobs for the maximal-order scan: tolerance, asymptotic cutoff, growth constant."""

    epsilon: float = 0.1
    threshold_n0: int = 10_000
    growth_constant_c: float = 0.1

    def __post_init__(self):
        if self.epsilon <= 0 or self.threshold_n0 <= 0 or self.growth_constant_c <= 0:
            raise InvalidArgument("all bound parameters must be strictly positive")


@dataclass(frozen=True)
class WigertReport:
    lo: int
    hi: int
    params: BoundParams
    threshold_value: float  # ln 2 * (1 + epsilon)
    max_ratio: float
    argmax_n: int
    argmax_d: int
    # n >= threshold_n0 with ratio above the threshold, as (n, d, ratio)
    violations: list[tuple[int, int, float]] = field(default_factory=list)


def max_order_ratio(n: int, d: int) -> float:
    """r(n) = ln d(n) * ln ln n / ln n, the quantity whose limsup is ln 2."""
    return math.log(d) * math.log(math.log(n)) / math.log(n)


def wigert_scan(
    table: PeriodTable, params: BoundParams, lo: int, hi: int
) -> WigertReport:
    """Scan r(n) over [lo, hi]: maximum, argmax, and above-threshold n."""
    if lo < 3:
        raise InvalidArgument("scan needs lo >= 3 (ln ln n must be defined)")
    if not lo <= hi <= table.limit:
        raise InvalidArgument(f"range [{lo}, {hi}] outside table limit {table.limit}")
    n = np.arange(lo, hi + 1, dtype=np.float64)
    d = table.divisor_of[lo : hi + 1].astype(np.float64)
    r = np.log(d) * np.log(np.log(n)) / np.log(n)
    imax = int(np.argmax(r))
    threshold = LN2 * (1.0 + params.epsilon)
    mask = (np.arange(lo, hi + 1) >= params.threshold_n0) & (r > threshold)
    violations = [
        (int(lo + i), int(table.divisor_of[lo + i]), float(r[i]))
        for i in np.flatnonzero(mask)
    ]
    return WigertReport(
        lo,
        hi,
        params,
        threshold,
        float(r[imax]),
        lo + imax,
        int(table.divisor_of[lo + imax]),
        violations,
    )


@dataclass(frozen=True)
class IncrementReport:
    """Growth of the canonical preimage against the 0.545 * nu(n) bound."""

    n: FactoredInt
    delta_log10: float
    bound: float
    bound_holds: bool
    # the proof assumes at least two distinct primes with exponent >= 2;
    # reported separately because the bound can fail when this does (n = 12)
    hypothesis_holds: bool


INCREMENT_CONSTANT = 0.545


def theorem2_increment(n: FactoredInt) -> IncrementReport:
    """Compare log10 growth under the canonical construction to 0.545 * nu(n)."""
    if not n.factors or n.factors == ((2, 1),):
        raise InvalidArgument("increment check needs a value >= 3")
    pre = canonical_preimage(n)
    delta = pre.log10_value() - n.log10_value()
    bound = INCREMENT_CONSTANT * n.distinct_prime_count()
    hypothesis = sum(1 for _, e in n.factors if e >= 2) >= 2
    return IncrementReport(n, delta, bound, delta >= bound, hypothesis)


def increment_report_json(rep: IncrementReport) -> dict:
    return {
        "n": rep.n.to_text(),
        "delta_log10": rep.delta_log10,
        "bound": rep.bound,
        "hypothesis_holds": rep.hypothesis_holds,
        "bound_holds": rep.bound_holds,
    }


def plot_data(table: PeriodTable, lo: int, hi: int) -> list[tuple[int, int]]:
    """(n, k) rows for external plotting."""
    if not 2 <= lo <= hi <= table.limit:
        raise InvalidArgument(f"range [{lo}, {hi}] outside table limit {table.limit}")
    k = table.period_of
    return [(n, int(k[n])) for n in range(lo, hi + 1)]


def write_histogram_csv(hist: Histogram, out: TextIO) -> None:
    out.write("k,count\n")
    for k in sorted(hist.counts):
        out.write(f"{k},{hist.counts[k]}\n")


def write_wigert_csv(table: PeriodTable, lo: int, hi: int, out: TextIO) -> None:
    """Full ``n,d,ratio`` rows over the scanned range."""
    if lo < 3 or not lo <= hi <= table.limit:
        raise InvalidArgument(f"range [{lo}, {hi}] invalid for table limit {table.limit}")
    d = table.divisor_of
    out.write("n,d,ratio\n")
    for n in range(lo, hi + 1):
        out.write(f"{n},{d[n]},{max_order_ratio(n, int(d[n])):.9f}\n")


def write_plot_csv(rows: list[tuple[int, int]], out: TextIO) -> None:
    out.write("n,k\n")
    for n, k in rows:
        out.write(f"{n},{k}\n")
