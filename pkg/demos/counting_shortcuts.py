#!/usr/bin/env python3
"""Counting with and without the closed-form shortcut.

Most semigroups with maximum primitive n have primitive depth 2, i.e. their
multiplicity is above n/2.  Those are exactly the subsets of (n/2, n]
containing n with gcd 1, and a Moebius sum over the divisors of n counts
them without enumeration.  The count by Frobenius number then falls out of a
plain divisor sum.
"""

import time

from maxprim import (
    KNOWN_COUNTS,
    count_by_max_primitive,
    depth_two_count,
    divisors,
    frobenius_count,
)

print("n, depth-2 part, total, share of depth 2")
for n in (10, 15, 20, 25, 30):
    total = count_by_max_primitive(n).max_primitive_count
    d2 = depth_two_count(n)
    print(f"  {n:>2}  {d2:>6}  {total:>6}  {d2 / total:.0%}")

print("\nFull enumeration agrees with the formula-assisted mode:")
for n in (12, 18, 24):
    full = count_by_max_primitive(n, "full-enumeration").max_primitive_count
    fast = count_by_max_primitive(n, "formula-assisted").max_primitive_count
    print(f"  n={n}: full={full}, assisted={fast}")

print("\nCounts by Frobenius number are divisor sums of counts by maximum primitive:")
table = {}
for n in range(1, 25):
    table[n] = count_by_max_primitive(n).max_primitive_count
for n in (6, 12, 23, 24):
    print(f"  N_{n} = sum of A_d over d | {n} = {frobenius_count(n, table)}"
          f"  (published: {KNOWN_COUNTS[n][1]})")

print("\nDepth refinement for n = 12 (k -> counts at that depth):")
record = count_by_max_primitive(12, by_depth=True)
for k, (by_max, by_frob) in sorted(record.by_depth.items()):
    print(f"  depth {k}: {by_max} by maximum primitive, {by_frob} by Frobenius number")

t0 = time.perf_counter()
a35 = count_by_max_primitive(35).max_primitive_count
print(f"\nA_35 = {a35} (published {KNOWN_COUNTS[35][0]}) in {time.perf_counter() - t0:.1f}s")
