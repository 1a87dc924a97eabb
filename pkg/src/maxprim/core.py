"""Exact arithmetic for numerical semigroups.

A numerical semigroup is a cofinite subset of the nonnegative integers that
contains 0 and is closed under addition; equivalently, the set of nonnegative
integer combinations of a generating set with greatest common divisor 1.
Everything here is exact integer arithmetic on plain tuples; membership tables
are big-int bitsets, so all operations are pure and safe to share between
worker processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

__all__ = [
    "AperySet",
    "GeneratorSet",
    "MembershipTable",
    "NotASemigroupError",
    "NumericalSemigroup",
    "SemigroupInvariants",
    "apery_set",
    "as_generator_set",
    "combination_bits",
    "gcd_of_set",
    "invariants",
    "membership_table",
    "minimal_generators",
]

# A generator set is a strictly increasing tuple of positive integers.
GeneratorSet = tuple[int, ...]


class NotASemigroupError(ValueError):
    """The generators have gcd > 1 and span no numerical semigroup."""


def as_generator_set(elements: Iterable[int]) -> GeneratorSet:
    """Normalize ``elements`` to a strictly increasing tuple of positive ints."""
    gens = tuple(sorted(set(elements)))
    if not gens:
        raise ValueError("generator set must be nonempty")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    for g in gens:
        if g != int(g):
            raise ValueError(f"generators must be integers, got {g!r}")
    return gens


def gcd_of_set(elements: Iterable[int]) -> int:
    """Greatest common divisor of a nonempty set of positive integers."""
    return math.gcd(*as_generator_set(elements))


def combination_bits(gens: Iterable[int], bound: int) -> int:
    """Bitset of the nonnegative integer combinations of ``gens`` up to ``bound``.

    Bit x of the result is set iff x is a sum of elements of ``gens`` with
    repetition (bit 0 is always set: the empty sum).  Each generator is folded
    in with doubling shifts, so the cost is O(len(gens) * log(bound)) big-int
    operations on (bound+1)-bit integers.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for g in gens:
        if 0 < g <= bound:
            shift = g
            while shift <= bound:
                bits |= (bits << shift) & mask
                shift <<= 1
    return bits


@dataclass(frozen=True)
class MembershipTable:
    """Membership of [0, bound] in the monoid generated by some set.

    ``bits`` packs the table little-endian: bit x is set iff x is a member.
    """

    bound: int
    bits: int

    def __contains__(self, x: int) -> bool:
        if not 0 <= x <= self.bound:
            raise IndexError(f"{x} outside table range [0, {self.bound}]")
        return bool((self.bits >> x) & 1)

    def __getitem__(self, x: int) -> bool:
        return self.__contains__(x)

    @property
    def member(self) -> tuple[bool, ...]:
        """The table as a boolean sequence indexed 0..bound."""
        return tuple(bool((self.bits >> x) & 1) for x in range(self.bound + 1))

    def members(self) -> tuple[int, ...]:
        """All members up to the bound, ascending."""
        return tuple(x for x in range(self.bound + 1) if (self.bits >> x) & 1)


def membership_table(generators: Iterable[int], bound: int) -> MembershipTable:
    """Table of nonnegative integer combinations of ``generators`` up to ``bound``."""
    gens = as_generator_set(generators)
    return MembershipTable(bound, combination_bits(gens, bound))


@dataclass(frozen=True)
class AperySet:
    """Least semigroup element in each residue class modulo the multiplicity."""

    modulus: int
    values: tuple[int, ...]


def apery_set(generators: Iterable[int]) -> AperySet:
    """Apery set of the semigroup spanned by ``generators`` w.r.t. its least element.

    Entry i is the least combination congruent to i modulo m = min(generators).
    Computed by relaxing residue classes over the generators until a fixpoint,
    which converges because all generators are positive and the classes form a
    finite set (Bellman-Ford style, at most m sweeps).
    """
    gens = as_generator_set(generators)
    if math.gcd(*gens) != 1:
        raise NotASemigroupError(f"gcd of {gens} is {math.gcd(*gens)}, not 1")
    m = gens[0]
    if m == 1:
        return AperySet(1, (0,))
    infinity = None
    w: list[int | None] = [infinity] * m
    w[0] = 0
    tail = gens[1:]  # adding m itself never improves a class
    changed = True
    while changed:
        changed = False
        for i in range(m):
            base = w[i]
            if base is None:
                continue
            for g in tail:
                j = (i + g) % m
                v = base + g
                wj = w[j]
                if wj is None or v < wj:
                    w[j] = v
                    changed = True
    return AperySet(m, tuple(w))  # type: ignore[arg-type]


def _is_sum_of_two(bits: int, x: int) -> bool:
    # x = a + b with both a, b nonzero members of the bitset.
    for a in range(1, x // 2 + 1):
        if (bits >> a) & 1 and (bits >> (x - a)) & 1:
            return True
    return False


def minimal_generators(generators: Iterable[int]) -> GeneratorSet:
    """The unique minimal generating set of the monoid spanned by ``generators``.

    An element is a minimal generator iff it is not a sum of two nonzero
    members; every minimal generator must occur in any generating set, so it
    suffices to filter the input.  Works for any submonoid of the nonnegative
    integers, not only numerical semigroups.  Idempotent.
    """
    gens = as_generator_set(generators)
    if gens[0] == 1:
        return (1,)
    bits = combination_bits(gens, gens[-1])
    return tuple(x for x in gens if not _is_sum_of_two(bits, x))


@dataclass(frozen=True)
class SemigroupInvariants:
    """The standard numerical invariants of one numerical semigroup.

    ``frobenius`` is the largest integer outside the semigroup (-1 for the
    full set of nonnegative integers), ``conductor`` is that plus one,
    ``genus`` counts the gaps, ``left_count`` the elements below the Frobenius
    number, ``depth`` is ceil(conductor / multiplicity) and ``primitive_depth``
    is ceil(max_primitive / multiplicity).  ``wilf_holds`` records whether
    embedding_dimension * left_count >= conductor.
    """

    multiplicity: int
    max_primitive: int
    embedding_dimension: int
    frobenius: int
    conductor: int
    genus: int
    left_count: int
    depth: int
    primitive_depth: int
    wilf_holds: bool


def invariants(generators: Iterable[int]) -> SemigroupInvariants:
    """Compute all invariants of the semigroup spanned by ``generators``.

    The generating set is reduced to the minimal one first, so non-minimal
    input is accepted.  Frobenius number and genus come from the Apery set:
    F = max(w) - m and genus = (sum(w) - m(m-1)/2) / m.
    """
    gens = minimal_generators(generators)
    if math.gcd(*gens) != 1:
        raise NotASemigroupError(f"gcd of {gens} is {math.gcd(*gens)}, not 1")
    m, top, dim = gens[0], gens[-1], len(gens)
    if m == 1:
        # The full set of nonnegative integers: no gaps, conductor 0,
        # depth 0 by convention, and Wilf holds as 0 >= 0.
        return SemigroupInvariants(1, 1, 1, -1, 0, 0, 0, 0, 1, True)
    values = apery_set(gens).values
    frobenius = max(values) - m
    conductor = frobenius + 1
    genus = (sum(values) - m * (m - 1) // 2) // m
    left_count = conductor - genus
    depth = -(-conductor // m)
    primitive_depth = -(-top // m)
    return SemigroupInvariants(
        multiplicity=m,
        max_primitive=top,
        embedding_dimension=dim,
        frobenius=frobenius,
        conductor=conductor,
        genus=genus,
        left_count=left_count,
        depth=depth,
        primitive_depth=primitive_depth,
        wilf_holds=dim * left_count >= conductor,
    )


class NumericalSemigroup:
    """A numerical semigroup, identified by its minimal generating set."""

    def __init__(self, generators: Iterable[int]):
        gens = as_generator_set(generators)
        if math.gcd(*gens) != 1:
            raise NotASemigroupError(f"gcd of {gens} is {math.gcd(*gens)}, not 1")
        self.generators = minimal_generators(gens)

    @cached_property
    def invariants(self) -> SemigroupInvariants:
        return invariants(self.generators)

    def membership(self, bound: int) -> MembershipTable:
        """Membership table of this semigroup on [0, bound]."""
        return membership_table(self.generators, bound)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NumericalSemigroup):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.generators)) + ">"
