#!/usr/bin/env python3
"""Highly composite numbers and the minimal-chain conjecture.

Every HCN uses consecutive primes from 2 with non-increasing exponents,
which lets enumeration reach magnitudes a sieve never could -- including
the 12-digit minimal period-7 value.
"""

import divperiod as dp

# The first handful of HCNs, straight from structural enumeration.
print("HCNs up to 10^2.1:")
for rec in dp.enumerate_hcn(2.1):
    print(f"  {rec.decimal:>4} = {rec.value}  (d={rec.divisor_count})")

# Membership queries work at any magnitude the enumeration can reach.
print("\n5040 highly composite?", dp.is_highly_composite(dp.factorize(5040)))
print("18 highly composite?  ", dp.is_highly_composite(dp.factorize(18)))

big = dp.parse("2^6*3^4*5^2*7^2*11*13*17*19")
print(f"{big.to_decimal()} highly composite?", dp.is_highly_composite(big))

# The conjecture: every minimal-period value is an HCN, and adjacent
# values should satisfy ln n_(k-1) ~ ln 2 * ln n_k / ln ln n_k.  The
# report evaluates both without asserting either.
print("\nconjecture report along the chain:")
for row in dp.conjecture_report(dp.chain(7)):
    ratio = "-" if row.ratio is None else f"{row.ratio:.4f}"
    flag = "  [degenerate]" if row.degenerate else ""
    print(f"  k={row.period}: n={row.decimal} ratio={ratio} hcn={row.is_hcn}{flag}")
