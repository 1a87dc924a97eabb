#!/usr/bin/env python3
"""Verify Wilf's inequality family by family and hunt for novel cases.

Wilf's conjecture: e * l >= c, with e the number of minimal generators, l
the count of elements below the Frobenius number, c the conductor.  Known
sufficient conditions cover almost everything small; the interesting
semigroups are the verified ones covered by no known condition.
"""

from maxprim import (
    NumericalSemigroup,
    classify_known_cases,
    verify_wilf_range,
    wilf_holds,
)

print("Sweep of all semigroups with maximum primitive up to 24:")
for report in verify_wilf_range(1, 24):
    flag = "OK " if not report.violations else "!!!"
    print(
        f"  {flag} n={report.max_primitive:>2}: checked {report.total_checked:>5},"
        f" violations {len(report.violations)}, novel {report.novel_count}"
    )

print("\nThe two four-generator witnesses at multiplicity 20:")
for gens in [(20, 21, 22, 24), (20, 22, 23, 24)]:
    s = NumericalSemigroup(gens)
    inv = s.invariants
    print(
        f"  {s}: e*l = {inv.embedding_dimension * inv.left_count}"
        f" >= c = {inv.conductor}: {wilf_holds(s)}"
    )

print("\nA semigroup no known condition covers:")
s = NumericalSemigroup((50, 52, 53, 60))
vec = classify_known_cases(s)
inv = s.invariants
print(f"  {s}: F={inv.frobenius}, c={inv.conductor}, g={inv.genus}, l={inv.left_count}")
for name, value in vars(vec).items():
    print(f"    {name:<24} {value}")
print(f"  Wilf still holds: {wilf_holds(s)}")

print("\nThere are many such semigroups at maximum primitive 60, multiplicity 50:")
(report,) = verify_wilf_range(60, 60, multiplicity=50)
print(f"  checked {report.total_checked}, novel {report.novel_count}, e.g.:")
for gens in report.novel_samples[:5]:
    print("   ", NumericalSemigroup(gens))
