"""Wilf verification over enumerated families, with a known-case classifier.

Wilf's conjecture asserts e * l >= c for every numerical semigroup, where e
is the embedding dimension, l the number of elements below the Frobenius
number and c the conductor.  ``verify_wilf_range`` sweeps every semigroup
with maximum primitive in a range; semigroups matching one of the classes
already known to satisfy the inequality can be skipped, everything else gets
the explicit check.  The same classifier flags "novel" semigroups: verified
ones matching none of the known classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import GeneratorSet, NumericalSemigroup, SemigroupInvariants, invariants
from .enumeration import TreeOptions, enumerate_all, enumerate_tree

__all__ = [
    "KnownCaseVector",
    "WilfReport",
    "WilfTally",
    "classify_known_cases",
    "is_arithmetic_progression",
    "merge_tallies",
    "verify_wilf_range",
    "wilf_holds",
    "wilf_tally",
]


def _resolve(semigroup) -> tuple[GeneratorSet, SemigroupInvariants]:
    if isinstance(semigroup, NumericalSemigroup):
        return semigroup.generators, semigroup.invariants
    ns = NumericalSemigroup(semigroup)
    return ns.generators, ns.invariants


def wilf_holds(semigroup) -> bool:
    """Whether embedding_dimension * left_count >= conductor."""
    _, inv = _resolve(semigroup)
    return inv.embedding_dimension * inv.left_count >= inv.conductor


def is_arithmetic_progression(values: Sequence[int]) -> bool:
    """True iff the sorted values form an arithmetic progression (len <= 2 counts)."""
    if len(values) <= 2:
        return True
    step = values[1] - values[0]
    return all(values[i + 1] - values[i] == step for i in range(1, len(values) - 1))


@dataclass(frozen=True)
class KnownCaseVector:
    """Which known sufficient conditions for Wilf's inequality a semigroup meets.

    All comparisons are exact integer arithmetic; in particular the primitive
    count test squares the count instead of taking a square root.
    """

    e_at_most_3: bool
    c_at_most_3m: bool
    e_at_least_m_over_3: bool
    left_at_most_12: bool
    m_at_most_19: bool
    many_low_primitives: bool
    g_at_most_100: bool
    arithmetic_progression: bool

    def as_tuple(self) -> tuple[bool, ...]:
        return (
            self.e_at_most_3,
            self.c_at_most_3m,
            self.e_at_least_m_over_3,
            self.left_at_most_12,
            self.m_at_most_19,
            self.many_low_primitives,
            self.g_at_most_100,
            self.arithmetic_progression,
        )

    @property
    def any_true(self) -> bool:
        return any(self.as_tuple())


def _low_primitive_count(gens: GeneratorSet) -> int:
    m = gens[0]
    return sum(1 for p in gens if m < p < 2 * m)


def classify_known_cases(semigroup) -> KnownCaseVector:
    """Evaluate all eight known sufficient conditions exactly.

    e <= 3; c <= 3m; 3e >= m; at most 12 elements below the Frobenius number;
    m <= 19; at least sqrt(3m) primitives strictly inside (m, 2m); genus at
    most 100; primitives in arithmetic progression.
    """
    gens, inv = _resolve(semigroup)
    low = _low_primitive_count(gens)
    return KnownCaseVector(
        e_at_most_3=inv.embedding_dimension <= 3,
        c_at_most_3m=inv.conductor <= 3 * inv.multiplicity,
        e_at_least_m_over_3=3 * inv.embedding_dimension >= inv.multiplicity,
        left_at_most_12=inv.left_count <= 12,
        m_at_most_19=inv.multiplicity <= 19,
        many_low_primitives=low * low >= 3 * inv.multiplicity,
        g_at_most_100=inv.genus <= 100,
        arithmetic_progression=is_arithmetic_progression(gens),
    )


@dataclass(frozen=True)
class WilfTally:
    """Partial verification result for one work unit; merged by concatenation."""

    total: int
    violations: tuple[GeneratorSet, ...]
    novel_count: int
    novel_samples: tuple[GeneratorSet, ...]


def merge_tallies(tallies: Iterable[WilfTally], sample_cap: int = 10) -> WilfTally:
    """Order-preserving reduction of partial tallies."""
    total = 0
    violations: list[GeneratorSet] = []
    novel_count = 0
    samples: list[GeneratorSet] = []
    for t in tallies:
        total += t.total
        violations.extend(t.violations)
        novel_count += t.novel_count
        if len(samples) < sample_cap:
            samples.extend(t.novel_samples[: sample_cap - len(samples)])
    return WilfTally(total, tuple(violations), novel_count, tuple(samples))


@dataclass(frozen=True)
class WilfReport:
    """Verification summary for one maximum primitive."""

    max_primitive: int
    total_checked: int
    violations: tuple[GeneratorSet, ...]
    novel_count: int
    novel_samples: tuple[GeneratorSet, ...]


class _Checker:
    """Per-semigroup Wilf check with optional known-case short-circuiting.

    In the default mode a semigroup is skipped (it provably satisfies the
    inequality) as soon as one condition computable from the generator tuple
    alone holds; otherwise full invariants are computed, every condition is
    evaluated, and the inequality is checked explicitly.  ``full_check``
    disables all skipping.
    """

    __slots__ = ("full_check", "sample_cap", "total", "violations", "novel_count", "samples")

    def __init__(self, full_check: bool, sample_cap: int):
        self.full_check = full_check
        self.sample_cap = sample_cap
        self.total = 0
        self.violations: list[GeneratorSet] = []
        self.novel_count = 0
        self.samples: list[GeneratorSet] = []

    def __call__(self, gens: GeneratorSet) -> None:
        self.total += 1
        e = len(gens)
        m = gens[0]
        cheap_hit = (
            e <= 3
            or m <= 19
            or 3 * e >= m
            or is_arithmetic_progression(gens)
            or _low_primitive_count(gens) ** 2 >= 3 * m
        )
        if cheap_hit and not self.full_check:
            return
        inv = invariants(gens)
        holds = inv.embedding_dimension * inv.left_count >= inv.conductor
        if not holds:
            self.violations.append(gens)
            return
        if not cheap_hit and not (
            inv.conductor <= 3 * inv.multiplicity
            or inv.left_count <= 12
            or inv.genus <= 100
        ):
            self.novel_count += 1
            if len(self.samples) < self.sample_cap:
                self.samples.append(gens)

    def tally(self) -> WilfTally:
        return WilfTally(
            self.total, tuple(self.violations), self.novel_count, tuple(self.samples)
        )


def wilf_tally(
    max_primitive: int,
    multiplicity: int | None = None,
    len_cutoff: int | None = None,
    full_check: bool = False,
    sample_cap: int = 10,
) -> WilfTally:
    """Verify one (max primitive, multiplicity) work unit; picklable and pure.

    A multiplicity outside [1, max_primitive) yields an empty tally, so range
    sweeps with a fixed multiplicity filter need no special-casing.
    """
    checker = _Checker(full_check, sample_cap)
    opt = TreeOptions(len_cutoff=len_cutoff, collect=False, on_visit=checker)
    if multiplicity is None:
        enumerate_all(max_primitive, opt)
    elif max_primitive == 1:
        if multiplicity == 1:
            checker((1,))
    elif 1 <= multiplicity < max_primitive:
        enumerate_tree(max_primitive, multiplicity, opt)
    return checker.tally()


def verify_wilf_range(
    n_from: int,
    n_to: int,
    opt: TreeOptions | None = None,
    multiplicity: int | None = None,
    full_check: bool = False,
    sample_cap: int = 10,
) -> list[WilfReport]:
    """Check Wilf's inequality on every semigroup with maximum primitive in range.

    Returns one report per n with the number of semigroups checked, any
    violations (expected none), and how many verified semigroups match no
    known sufficient condition.  Deterministic for fixed arguments.
    """
    if not 1 <= n_from <= n_to:
        raise ValueError(f"need 1 <= n_from <= n_to, got {n_from}..{n_to}")
    len_cutoff = None if opt is None else opt.len_cutoff
    reports = []
    for n in range(n_from, n_to + 1):
        t = wilf_tally(n, multiplicity, len_cutoff, full_check, sample_cap)
        reports.append(
            WilfReport(n, t.total, t.violations, t.novel_count, t.novel_samples)
        )
    return reports
