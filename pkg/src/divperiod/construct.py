"""Preimage constructions under the divisor function.

Three routes to an n1 with d(n1) = n:

* ``canonical_preimage`` -- the greedy block construction: process n's
  prime powers p^a from the largest prime down, spending exponent (p-1)
  on the next a unused primes.
* ``naive_preimage`` -- one prime per prime-power factor, q_i^(p_i^a_i - 1);
  enough to prove the period unbounded, never minimal for long.
* ``exact_min_with_divisors`` -- an independent oracle: depth-first
  search over non-increasing exponent sequences on 2, 3, 5, ... whose
  (e_i + 1) product hits the target, branch-and-bound in log space with
  exact comparison on near-ties.

``min_with_period`` and ``chain`` combine these with the sieve to build
the minimal-n-per-period table, labelling each entry with how far its
minimality was actually verified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .divisor import PeriodTable, first_occurrences, period_table
from .errors import InvalidArgument
from .factored import FactoredInt
from .primes import _default_table, factorize, nth_prime

DEFAULT_CANDIDATE_BOUND = 5_000_000

# log10 gap below which candidate comparison goes exact
_LOG_SCREEN = 1e-6


def canonical_preimage(n: FactoredInt) -> FactoredInt:
    """Greedy minimal-preimage construction (largest prime power first)."""
    if not n.factors:
        raise InvalidArgument("no integer > 1 has exactly 1 divisor")
    out = []
    cursor = 1
    for p, a in reversed(n.factors):
        for _ in range(a):
            out.append((nth_prime(cursor), p - 1))
            cursor += 1
    return FactoredInt(tuple(out))


def naive_preimage(n: FactoredInt) -> FactoredInt:
    """One prime per prime-power factor: i-th prime raised to p_i^a_i - 1."""
    if not n.factors:
        raise InvalidArgument("no integer > 1 has exactly 1 divisor")
    out = []
    for i, (p, a) in enumerate(n.factors, start=1):
        out.append((nth_prime(i), p**a - 1))
    return FactoredInt(tuple(out))


@lru_cache(maxsize=200_000)
def _divisors_desc(t: int) -> tuple[int, ...]:
    """Divisors of t that are >= 2, descending."""
    divs = [1]
    for p, e in factorize(t).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted((d for d in divs if d >= 2), reverse=True))


def _exps_log10(exps: tuple[int, ...]) -> float:
    return sum(e * math.log10(nth_prime(i + 1)) for i, e in enumerate(exps))


def _exps_to_factored(exps: tuple[int, ...]) -> FactoredInt:
    return FactoredInt(tuple((nth_prime(i + 1), e) for i, e in enumerate(exps)))


class _MinSearch:
    """Branch-and-bound state shared across one or many targets."""

    def __init__(self):
        self.best_exps: tuple[int, ...] | None = None
        self.best_log: float = math.inf
        self.best_target: int | None = None

    def run(self, target: int) -> None:
        self._target = target
        self._dfs(target, 1, target, 0.0, [])

    def _offer(self, exps: list[int], log10v: float) -> None:
        if log10v > self.best_log - _LOG_SCREEN and self.best_exps is not None:
            if log10v > self.best_log + _LOG_SCREEN:
                return
            # near-tie: decide exactly
            if _exps_to_factored(tuple(exps)).compare(_exps_to_factored(self.best_exps)) >= 0:
                return
        self.best_exps = tuple(exps)
        self.best_log = _exps_log10(self.best_exps)
        self.best_target = self._target

    def _dfs(self, rem: int, idx: int, max_f: int, log10v: float, exps: list[int]) -> None:
        if rem == 1:
            self._offer(exps, log10v)
            return
        pl = math.log10(nth_prime(idx))
        for f in _divisors_desc(rem):
            if f > max_f:
                continue
            nl = log10v + (f - 1) * pl
            if nl > self.best_log + _LOG_SCREEN:
                continue
            exps.append(f - 1)
            self._dfs(rem // f, idx + 1, f, nl, exps)
            exps.pop()


def exact_min_with_divisors(target: int) -> FactoredInt:
    """The smallest integer with exactly ``target`` divisors.

    Exponent sequences may be assumed non-increasing on consecutive
    primes from 2 (swapping any inversion shrinks the value), so the
    search space is exactly the multiplicative partitions of the target.
    """
    if target < 1:
        raise InvalidArgument(f"divisor-count target must be >= 1, got {target}")
    if target >= 2**64:
        raise InvalidArgument("target exceeds 64 bits")
    if target == 1:
        return FactoredInt(())
    search = _MinSearch()
    search.run(target)
    return _exps_to_factored(search.best_exps)


@dataclass
class ChainRecord:
    """One entry of the minimal-n-per-period table."""

    period: int
    value: FactoredInt
    decimal: str
    digit_count: int
    verification: str
    # does canonical_preimage of the previous chain entry reproduce this
    # value? None when there is no previous entry to apply it to.
    canonical_match: bool | None = None


_table_cache: dict[int, PeriodTable] = {}


def _cached_table(limit: int) -> PeriodTable:
    if limit not in _table_cache:
        _table_cache.clear()
        _table_cache[limit] = period_table(limit)
    return _table_cache[limit]


def _record(k: int, value: FactoredInt, verification: str) -> ChainRecord:
    dec = value.to_decimal()
    return ChainRecord(k, value, dec, len(dec), verification)


def min_with_period(
    k: int, candidate_bound: int = DEFAULT_CANDIDATE_BOUND, table: PeriodTable | None = None
) -> ChainRecord | None:
    """Minimal integer with period k, or None if unreachable at this bound.

    If the sieve up to ``candidate_bound`` already contains a period-k
    entry the answer is unconditional (sieve-verified).  Otherwise every
    sieved n' with period k-1 becomes a divisor-count target for the
    exact oracle and the minimum is only known relative to the bound.
    """
    if k < 1:
        raise InvalidArgument(f"period must be >= 1, got {k}")
    if candidate_bound < 2:
        raise InvalidArgument(f"candidate bound must be >= 2, got {candidate_bound}")
    if table is None:
        table = _cached_table(candidate_bound)
    occ = first_occurrences(table)
    if k in occ:
        return _record(k, factorize(occ[k]), "sieve-verified")

    targets = np.flatnonzero(table.period_of[: table.limit + 1] == k - 1)
    if targets.size == 0:
        return None
    spf = _default_table(table.limit).smallest_factor
    log10_2 = math.log10(2)
    search = _MinSearch()
    for t in targets.tolist():
        # any prime factor q of t forces a divisor-count factor >= q on
        # some prime, so the minimum with t divisors is >= 2^(q-1);
        # targets with a large prime factor cannot beat the running best
        m = t
        gpf = 0
        while m > 1:
            gpf = int(spf[m])
            while m % gpf == 0:
                m //= gpf
        if (gpf - 1) * log10_2 > search.best_log + _LOG_SCREEN:
            continue
        search.run(int(t))
    return _record(
        k, _exps_to_factored(search.best_exps), f"oracle-verified-up-to-bound({table.limit})"
    )


def chain(
    max_k: int, candidate_bound: int = DEFAULT_CANDIDATE_BOUND
) -> list[ChainRecord]:
    """Minimal-n records for periods 1..max_k, as far as reachable.

    k = 1 and k = 2 (values 2 and 4) are base cases: the canonical
    construction applied to 2 lands back on the fixed point 2 and never
    advances the period, so they cannot be produced by it.  Each later
    record also checks whether canonical_preimage of its predecessor
    reproduces it.
    """
    if max_k < 1:
        raise InvalidArgument(f"max_k must be >= 1, got {max_k}")
    table = _cached_table(candidate_bound)
    records: list[ChainRecord] = []
    for k in range(1, max_k + 1):
        if k <= 2:
            rec = _record(k, factorize(2 * k), "sieve-verified")
        else:
            rec = min_with_period(k, candidate_bound, table=table)
            if rec is None:
                break
            constructed = canonical_preimage(records[-1].value)
            rec.canonical_match = constructed.compare(rec.value) == 0
        records.append(rec)
    return records


def chain_record_json(rec: ChainRecord) -> dict:
    """The documented JSON shape for one chain entry."""
    return {
        "k": rec.period,
        "factored": rec.value.to_text(),
        "decimal": rec.decimal,
        "digits": rec.digit_count,
        "verification": rec.verification,
    }
