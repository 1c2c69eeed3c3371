"""Prime generation, primality testing, indexed prime access, factorization.

The substrate every other module consumes.  A least-prime-factor sieve
handles batch factorization; a separate growable prime list backs
``nth_prime`` so constructions can consume an unpredictable number of
primes without committing to a sieve limit up front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidArgument, ResourceLimit

# Practical sieve ceiling: 2*10^8 int32 entries is ~800 MB of arrays,
# already past the 10^8 design target.
SIEVE_CEILING = 200_000_000

# Trial division gives up past this bound; larger cofactors must be prime
# or a prime square, otherwise the caller has to supply the input
# pre-factored.
_TRIAL_LIMIT = 10_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, correct for all n < 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeTable:
    """Immutable sieve: all primes <= limit plus a least-prime-factor array."""

    limit: int
    primes: np.ndarray
    smallest_factor: np.ndarray


def build_table(limit: int) -> PrimeTable:
    """Least-prime-factor sieve up to ``limit`` (inclusive)."""
    if limit < 2:
        raise InvalidArgument(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_CEILING:
        raise ResourceLimit(f"sieve limit {limit} exceeds ceiling {SIEVE_CEILING}")
    dtype = np.int32 if limit < 2**31 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == 0:
            seg = spf[i * i :: i]
            seg[seg == 0] = i
    # every untouched index >= 2 is prime
    primes = np.flatnonzero(spf[2:] == 0).astype(np.int64) + 2
    spf[primes] = primes
    return PrimeTable(limit, primes, spf)


# --- growable prime list backing nth_prime / trial division ---

_prime_list: list[int] = []
_prime_list_limit = 0


def _extend_primes(target: int) -> None:
    global _prime_list, _prime_list_limit
    limit = max(target, 2 * _prime_list_limit, 1 << 10)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    _prime_list = np.flatnonzero(sieve).tolist()
    _prime_list_limit = limit


def nth_prime(i: int) -> int:
    """The i-th prime, 1-indexed: nth_prime(1) = 2."""
    if i < 1:
        raise InvalidArgument(f"prime index must be >= 1, got {i}")
    while len(_prime_list) < i:
        # p_i < i (ln i + ln ln i) for i >= 6; doubling handles the rest
        guess = int(i * (math.log(i + 6) + math.log(math.log(i + 6)))) + 16
        _extend_primes(max(guess, 2 * _prime_list_limit))
    return _prime_list[i - 1]


# default sieve for point factorization, built lazily and grown on demand
_table: PrimeTable | None = None


def _default_table(minimum: int) -> PrimeTable:
    global _table
    if _table is None or _table.limit < minimum:
        limit = max(minimum, 1_000_000)
        if _table is not None:
            limit = max(limit, 2 * _table.limit)
        _table = build_table(min(limit, SIEVE_CEILING))
    return _table


def factorize(n: int, table: PrimeTable | None = None):
    """Factor n >= 1 into a FactoredInt.

    Uses the least-prime-factor sieve when n is within table range and
    trial division by sieved primes otherwise.  Cofactors whose prime
    factors all exceed 10^7 are accepted only if prime or a prime square;
    anything else must enter the system already factored.
    """
    from .factored import FactoredInt

    if n < 1:
        raise InvalidArgument(f"cannot factor {n}")
    if n >= 2**64:
        raise InvalidArgument("input exceeds 64 bits; supply it in factored form")
    if n == 1:
        return FactoredInt(())

    factors: list[tuple[int, int]] = []
    if table is None and n <= 10_000_000:
        table = _default_table(n)
    if table is not None and n <= table.limit:
        spf = table.smallest_factor
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        factors.sort()
        return FactoredInt(tuple(factors))

    m = n
    idx = 1
    while True:
        p = nth_prime(idx)
        if p * p > m:
            break
        if p > _TRIAL_LIMIT:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        idx += 1
    if m > 1:
        if is_prime(m):
            factors.append((m, 1))
        else:
            r = math.isqrt(m)
            if r * r == m and is_prime(r):
                factors.append((r, 2))
            else:
                raise ResourceLimit(
                    f"cannot factor cofactor {m}: all prime factors exceed "
                    f"{_TRIAL_LIMIT}; supply the input in factored form"
                )
    factors.sort()
    return FactoredInt(tuple(factors))
