#!/usr/bin/env python3
"""Walk through the three enumerators on a small family.

The family T(M, m) holds every numerical semigroup whose minimal generating
set starts at m and ends at M.  Brute force tries all subsets in between;
the tree prunes candidates and agrees exactly.
"""

from maxprim import (
    TreeOptions,
    enumerate_all,
    enumerate_brute_force,
    enumerate_naive,
    enumerate_tree,
    possible_large_primitives,
    semigroups_with_given_primitives,
)

M, m = 9, 4

print(f"T({M},{m}) three ways:")
for name, fn in [
    ("brute", enumerate_brute_force),
    ("naive", enumerate_naive),
    ("tree ", enumerate_tree),
]:
    result = fn(M, m)
    print(f"  {name}: {result.count} semigroups ->", *result.semigroups)

print("\nPruning at the root {4, 9}:")
survivors = possible_large_primitives((4, 9))
print("  candidates surviving in (4, 9):", survivors)
print("  (5 died because 9-5=4 is a combination; 8 because 8=4+4)")

print("\nCompleting the root directly instead of recursing:")
completed = semigroups_with_given_primitives((4, 9))
print("  extensions of {4, 9}:", *completed.semigroups)

print("\nThe whole family for a maximum primitive, streamed through a visitor:")
log = []
enumerate_all(7, TreeOptions(collect=False, on_visit=log.append))
for gens in log:
    print("  visited", gens)
print(f"  total: {len(log)} semigroups with maximum primitive 7")

print("\nThe tree cutoff only reshapes the work, never the answer:")
for cutoff in (1, 5, 50):
    r = enumerate_tree(12, 5, TreeOptions(len_cutoff=cutoff))
    print(f"  len={cutoff:>2}: {r.count} semigroups")
