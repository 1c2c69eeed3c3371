#!/usr/bin/env python3
"""Tour of the basic dynamics: trajectories, periods, and batch tables.

Iterating d(n) always falls into the fixed point 2 (for n >= 2), and the
number of steps -- the period k(n) -- grows astonishingly slowly.
"""

import divperiod as dp

# A single trajectory: 60 needs five applications of d to reach 2.
traj = dp.trajectory(60)
print("trajectory of 60:", " -> ".join(map(str, traj.steps)))
print("period k(60) =", dp.period(60))

# Primes all have period 1 (d(p) = 2 immediately).
print("k(97) =", dp.period(97), " k(9973) =", dp.period(9973))

# Batch: sieve d(n) and k(n) for every n up to five million in one go.
table = dp.period_table(5_000_000)
print("\nfirst n attaining each period:")
for k, n in dp.first_occurrences(table).items():
    print(f"  k={k}: n={n}")

# How are the periods distributed?  Small periods utterly dominate.
hist = dp.histogram(table, 2, 5_000_000)
total = sum(hist.counts.values())
print("\nperiod frequencies up to 5e6:")
for k, c in sorted(hist.counts.items()):
    print(f"  k={k}: {c:>9}  ({100 * c / total:.3f}%)")

# Note the near tie between k=4 and k=5 at this depth; by 5e6 the
# period-5 class has in fact slightly overtaken period 4.
