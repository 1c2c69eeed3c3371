"""Exact arithmetic on integers represented by their prime factorization.

Values constructed in this package routinely exceed machine words
(chained preimages grow super-exponentially), so comparison and decimal
rendering work directly on the (prime, exponent) list.
"""

from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass

from .errors import InvalidArgument, TooLarge
from .primes import is_prime

# log10 gap below which compare() falls back to exact arithmetic
_LOG_SCREEN = 1e-6

DEFAULT_DIGIT_CEILING = 10_000

_FACTOR_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class FactoredInt:
    """An integer as an ordered (prime, exponent) list; () denotes 1."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise InvalidArgument(f"primes must be strictly increasing, got {p} after {prev}")
            if e < 1:
                raise InvalidArgument(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise InvalidArgument(f"{p} is not prime")
            prev = p

    # --- value views ---

    def value(self) -> int:
        """Exact integer value (arbitrary precision; may be huge)."""
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v

    def log10_value(self) -> float:
        return sum(e * math.log10(p) for p, e in self.factors)

    def divisor_count(self) -> int:
        d = 1
        for _, e in self.factors:
            d *= e + 1
        return d

    def distinct_prime_count(self) -> int:
        return len(self.factors)

    # --- arithmetic ---

    def multiply(self, other: "FactoredInt") -> "FactoredInt":
        merged: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredInt(tuple(sorted(merged.items())))

    __mul__ = multiply

    def compare(self, other: "FactoredInt") -> int:
        """-1, 0 or 1 ordering the exact values.

        A log10 screen settles clearly separated pairs; near-ties are
        decided exactly after cancelling shared prime powers, so
        minimality verdicts are never a float artifact.
        """
        la, lb = self.log10_value(), other.log10_value()
        if la - lb > _LOG_SCREEN:
            return 1
        if lb - la > _LOG_SCREEN:
            return -1
        residual: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            residual[p] = residual.get(p, 0) - e
        av = bv = 1
        for p, e in residual.items():
            if e > 0:
                av *= p**e
            elif e < 0:
                bv *= p**-e
        return (av > bv) - (av < bv)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    # --- rendering ---

    def to_decimal(self, max_digits: int = DEFAULT_DIGIT_CEILING) -> str:
        digits = math.floor(self.log10_value()) + 1
        if digits > max_digits:
            raise TooLarge(f"value has ~{digits} digits, above the ceiling of {max_digits}")
        if digits >= sys.get_int_max_str_digits():
            sys.set_int_max_str_digits(digits + 10)
        return str(self.value())

    def to_text(self) -> str:
        """Canonical text form, e.g. 2^6*3^4*5^2*7^2*11*13*17*19."""
        if not self.factors:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)

    def __str__(self):
        return self.to_text()


def parse(text: str) -> FactoredInt:
    """Parse the canonical text form (whitespace tolerated)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise InvalidArgument("empty factored-integer text")
    if s == "1":
        return FactoredInt(())
    factors = []
    for part in s.split("*"):
        m = _FACTOR_RE.match(part)
        if not m:
            raise InvalidArgument(f"bad factor {part!r} in {text!r}")
        p = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        factors.append((p, e))
    return FactoredInt(tuple(factors))
