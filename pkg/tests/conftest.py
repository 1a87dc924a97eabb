"""Shared brute-force oracles, kept independent of the library's bitset tricks."""

from __future__ import annotations

import math


def reachable_sums(gens, bound):
    """All nonnegative integer combinations of ``gens`` up to ``bound``,
    by exhaustive breadth-first search."""
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y <= bound and y not in seen:
                seen.add(y)
                frontier.append(y)
    return sorted(seen)


def scan_frobenius(gens, bound):
    """Largest non-member up to ``bound`` (-1 if none), by direct scan."""
    members = set(reachable_sums(gens, bound))
    gaps = [x for x in range(bound + 1) if x not in members]
    return gaps[-1] if gaps else -1


def conductor_bound(gens):
    """Safe membership bound: every Apery value is at most (m-1) * max(gens)."""
    return gens[0] * gens[-1] if len(gens) > 1 else 1


def coprime_sets(rng, cases, max_multiplicity=20, max_value=60, max_extra=6):
    """Random strictly sorted generator sets with gcd 1."""
    produced = 0
    while produced < cases:
        m = rng.randint(2, max_multiplicity)
        extras = {rng.randint(m + 1, max_value) for _ in range(rng.randint(0, max_extra))}
        gens = tuple(sorted({m, *extras}))
        if math.gcd(*gens) != 1:
            continue
        produced += 1
        yield gens
