"""Counting semigroups by maximum primitive and by Frobenius number.

The expensive direction (counting by maximum primitive) is enumeration, but
two exact identities remove most of the work:

* the semigroups whose primitive depth is 2 — the bulk for large n — are the
  subsets of (n/2, n] containing n with gcd 1, counted in closed form by a
  Moebius sum over the divisors of n;
* the count by Frobenius number is the plain divisor sum of the counts by
  maximum primitive, via a depth-preserving bijection that contracts a
  semigroup to the one spanned by its left elements and its Frobenius number.

Small-n brute-force oracles for both facts live here as well, so the
identities are testable against exhaustive enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .core import NumericalSemigroup, combination_bits
from .enumeration import TreeOptions, enumerate_tree

__all__ = [
    "CountRecord",
    "count_by_max_primitive",
    "depth_two_count",
    "divisors",
    "frobenius_count",
    "frobenius_semigroups_oracle",
    "left_elements_map",
    "moebius",
    "moebius_inversion",
]

ORACLE_CAP = 14

_MODES = {
    "full": "full",
    "full-enumeration": "full",
    "formula": "formula",
    "formula-assisted": "formula",
}


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n, ascending, by trial division."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def moebius(n: int) -> int:
    """Moebius function: 0 on squareful n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    factors = 0
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                return 0
            factors += 1
        p += 1
    if rest > 1:
        factors += 1
    return -1 if factors % 2 else 1


def depth_two_count(n: int) -> int:
    """Number of semigroups with maximum primitive n and primitive depth 2.

    Equals the number of subsets of (n/2, n] that contain n and have gcd 1:
    sum over divisors d of n of moebius(n/d) * (2^floor((d-1)/2) - 1).
    Requires n > 2.
    """
    if n <= 2:
        raise ValueError(f"defined for n > 2 only, got {n}")
    return sum(moebius(n // d) * ((1 << ((d - 1) // 2)) - 1) for d in divisors(n))


def moebius_inversion(n: int, divisor_values: Mapping[int, int]) -> int:
    """Invert a divisor-sum identity: sum of moebius(n/d) * value[d] over d | n.

    Used with per-depth Frobenius counts as values this yields the per-depth
    count by maximum primitive.  Every divisor of n must be present.
    """
    total = 0
    for d in divisors(n):
        if d not in divisor_values:
            raise ValueError(f"missing value for divisor {d} of {n}")
        total += moebius(n // d) * divisor_values[d]
    return total


def frobenius_count(n: int, max_primitive_counts: Mapping[int, int]) -> int:
    """Count of semigroups with Frobenius number n from counts by maximum primitive.

    The count with Frobenius number n is the sum over divisors d of n of the
    count with maximum primitive d.  Every divisor of n must be present.
    """
    total = 0
    for d in divisors(n):
        if d not in max_primitive_counts:
            raise ValueError(f"missing count for divisor {d} of {n}")
        total += max_primitive_counts[d]
    return total


@dataclass(frozen=True)
class CountRecord:
    """Counts for one n: by maximum primitive, optionally by Frobenius number
    and refined by (primitive) depth as k -> (max-primitive count, Frobenius count)."""

    n: int
    max_primitive_count: int
    frobenius_count: int | None = None
    by_depth: dict[int, tuple[int, int]] | None = None


def _depth_tally(n: int, mode: str, len_cutoff: int | None) -> dict[int, int]:
    # Count T(n, m) per primitive depth ceil(n/m); in formula mode the whole
    # depth-2 region (m > n/2) comes from the closed form.
    tally: dict[int, int] = {}
    if n == 1:
        return {1: 1}
    if n == 2:
        return {}
    top_m = n // 2 if mode == "formula" else n - 1
    for m in range(2, top_m + 1):
        c = enumerate_tree(n, m, TreeOptions(len_cutoff=len_cutoff, collect=False)).count
        if c:
            k = -(-n // m)
            tally[k] = tally.get(k, 0) + c
    if mode == "formula":
        c = depth_two_count(n)
        if c:
            tally[2] = tally.get(2, 0) + c
    return tally


def count_by_max_primitive(
    n: int,
    mode: str = "formula-assisted",
    opt: TreeOptions | None = None,
    by_depth: bool = False,
) -> CountRecord:
    """Count the numerical semigroups with maximum primitive n.

    ``mode`` is "full-enumeration" (everything enumerated) or
    "formula-assisted" (the primitive depth 2 region, multiplicity above n/2,
    is counted in closed form and only multiplicities up to n/2 are
    enumerated); both agree.  With ``by_depth`` the record carries the
    refinement k -> (count by maximum primitive, count by Frobenius number)
    at (primitive) depth k, the latter as a divisor sum of the former.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    try:
        kind = _MODES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None
    len_cutoff = None if opt is None else opt.len_cutoff
    tally = _depth_tally(n, kind, len_cutoff)
    total = sum(tally.values())
    refinement = None
    if by_depth:
        per_divisor = {d: _depth_tally(d, kind, len_cutoff) for d in divisors(n) if d != n}
        per_divisor[n] = tally
        depths = sorted({k for t in per_divisor.values() for k in t})
        refinement = {
            k: (tally.get(k, 0), sum(t.get(k, 0) for t in per_divisor.values()))
            for k in depths
        }
    return CountRecord(n, total, None, refinement)


def frobenius_semigroups_oracle(
    n: int, depth: int | None = None, cap: int = ORACLE_CAP
) -> tuple[NumericalSemigroup, ...]:
    """All numerical semigroups with Frobenius number n, by exhaustive search.

    Tests every subset A of [1, n-1] for whether {0} + A + (n, infinity) is
    additively closed and misses n.  Exponential (2^(n-1) subsets), hence the
    refusal above ``cap``.  ``depth`` filters to semigroups of that depth.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > cap:
        raise ValueError(f"oracle refuses n={n}: 2^{n - 1} subsets (cap {cap})")
    low_mask = (1 << n) - 1
    found = []
    for sub in range(1 << (n - 1)):
        a_bits = sub << 1  # bit i set iff i is kept, i in [1, n-1]
        ok = True
        rest = a_bits
        while rest:
            a = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            sums = a_bits << a
            if (sums >> n) & 1:
                ok = False  # two members add up to n itself
                break
            if ((sums & low_mask) | a_bits) != a_bits:
                ok = False  # a sum below n escapes the set
                break
        if not ok:
            continue
        m = (a_bits & -a_bits).bit_length() - 1 if a_bits else n + 1
        if depth is not None and -(-(n + 1) // m) != depth:
            continue
        members = [i for i in range(1, n) if (a_bits >> i) & 1]
        found.append(NumericalSemigroup(members + list(range(n + 1, 2 * n + 2))))
    return tuple(sorted(found, key=lambda s: s.generators))


def left_elements_map(semigroup: NumericalSemigroup) -> NumericalSemigroup:
    """Contract a semigroup to the one spanned by its scaled left part.

    Takes the elements below the Frobenius number together with the Frobenius
    number itself, divides by their gcd, and spans a new semigroup.  The new
    maximum primitive divides the old Frobenius number, and the new primitive
    depth equals the old depth; on semigroups of fixed Frobenius number and
    depth the map is a bijection onto the semigroups whose maximum primitive
    divides it at equal primitive depth.
    """
    frob = semigroup.invariants.frobenius
    if frob < 0:
        raise ValueError("the full semigroup <1> has no Frobenius number to adjoin")
    bits = combination_bits(semigroup.generators, frob)
    scaled = [x for x in range(1, frob) if (bits >> x) & 1]
    scaled.append(frob)
    g = math.gcd(*scaled)
    return NumericalSemigroup(x // g for x in scaled)
