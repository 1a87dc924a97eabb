"""Enumeration of numerical semigroups with a given maximum primitive.

Three interchangeable enumerators produce, for a multiplicity m and a maximum
primitive M, the set of all numerical semigroups whose minimal generating set
has least element m and greatest element M:

* ``enumerate_brute_force`` tries every subset of (m, M) — the reference
  implementation the others are checked against;
* ``enumerate_naive`` splits off the cheap case m > M/2 (a gcd test suffices
  there) and prunes impossible candidates elsewhere;
* ``enumerate_tree`` explores a tree of submonoids, extending the generating
  set one candidate at a time and finishing small subtrees by direct
  completion over residue classes.

All enumerators emit minimal generating sets as sorted tuples, each semigroup
exactly once, and are pure functions of their arguments: parallel callers can
split the work by multiplicity (or by first tree extension) and merge results
by set union or addition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable

from .core import GeneratorSet, as_generator_set, combination_bits, minimal_generators

__all__ = [
    "EnumerationResult",
    "TreeOptions",
    "default_len_cutoff",
    "enumerate_all",
    "enumerate_brute_force",
    "enumerate_naive",
    "enumerate_tree",
    "possible_large_primitives",
    "semigroups_with_given_primitives",
    "tree_count",
]

Visitor = Callable[[GeneratorSet], None]


def default_len_cutoff(max_primitive: int, multiplicity: int) -> int:
    """Default subtree-size cutoff, tuned for maximum primitives around 60.

    Nodes with more remaining candidates than this recurse; smaller subtrees
    are completed directly.  Any positive value yields the same output, only
    the shape of the work changes.
    """
    return max(1, math.ceil(14 * (max_primitive - multiplicity) / 5))


@dataclass
class TreeOptions:
    """Knobs for the tree enumerator.

    ``len_cutoff`` bounds when subtrees are completed directly instead of
    recursed into (None picks the default heuristic for each (M, m) pair);
    ``collect`` materializes the result set; ``on_visit`` is called once per
    semigroup with its minimal generating set, in deterministic (depth-first)
    order for fixed arguments.
    """

    len_cutoff: int | None = None
    collect: bool = True
    on_visit: Visitor | None = None

    def resolved_cutoff(self, max_primitive: int, multiplicity: int) -> int:
        if self.len_cutoff is None:
            return default_len_cutoff(max_primitive, multiplicity)
        if self.len_cutoff < 1:
            raise ValueError(f"len cutoff must be >= 1, got {self.len_cutoff}")
        return self.len_cutoff


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of one enumeration: the count, plus the sets when collected."""

    semigroups: tuple[GeneratorSet, ...] | None
    count: int


class _Sink:
    """Accumulates visits; shared by all enumerators."""

    __slots__ = ("count", "items", "on_visit")

    def __init__(self, opt: TreeOptions | None):
        self.count = 0
        self.items: list[GeneratorSet] | None = [] if opt is None or opt.collect else None
        self.on_visit = None if opt is None else opt.on_visit

    def visit(self, gens: GeneratorSet) -> None:
        self.count += 1
        if self.items is not None:
            self.items.append(gens)
        if self.on_visit is not None:
            self.on_visit(gens)

    def result(self) -> EnumerationResult:
        if self.items is None:
            return EnumerationResult(None, self.count)
        return EnumerationResult(tuple(sorted(self.items)), self.count)


def _check_bounds(max_primitive: int, multiplicity: int) -> None:
    if not 1 <= multiplicity < max_primitive:
        raise ValueError(
            f"need 1 <= multiplicity < max primitive, got m={multiplicity}, M={max_primitive}"
        )


def enumerate_brute_force(
    max_primitive: int, multiplicity: int, opt: TreeOptions | None = None
) -> EnumerationResult:
    """All semigroups with the given multiplicity and maximum primitive, by brute force.

    Every subset of the open interval (m, M) is joined with {m, M} and kept
    iff the gcd is 1 and the set equals the minimal generating set of the
    monoid it spans.  Exponential in M - m; meant as the reference oracle.
    """
    _check_bounds(max_primitive, multiplicity)
    sink = _Sink(opt)
    mid = range(multiplicity + 1, max_primitive)
    for size in range(len(mid) + 1):
        for chosen in combinations(mid, size):
            cand = (multiplicity, *chosen, max_primitive)
            if math.gcd(*cand) == 1 and minimal_generators(cand) == cand:
                sink.visit(cand)
    return sink.result()


def _visit_depth_two(max_primitive: int, multiplicity: int, visit: Visitor) -> None:
    # Multiplicity above M/2: every generator lies in (M/2, M], so no element
    # is a sum of two others and any subset with gcd 1 is already minimal.
    mid = range(multiplicity + 1, max_primitive)
    for size in range(len(mid) + 1):
        for chosen in combinations(mid, size):
            cand = (multiplicity, *chosen, max_primitive)
            if math.gcd(*cand) == 1:
                visit(cand)


def _naive_candidates(max_primitive: int, multiplicity: int) -> list[int]:
    # Divisors of M never belong to such a semigroup and multiples of m are
    # never minimal generators, so neither can appear in a generating set.
    banned = {d for d in range(2, max_primitive) if max_primitive % d == 0}
    banned.update(range(2 * multiplicity, max_primitive, multiplicity))
    return [x for x in range(multiplicity + 1, max_primitive) if x not in banned]


def enumerate_naive(
    max_primitive: int, multiplicity: int, opt: TreeOptions | None = None
) -> EnumerationResult:
    """Same output as the brute force, with two shortcuts.

    For m > M/2 a gcd test per subset suffices.  Otherwise candidates exclude
    divisors of M and multiples of m, and subsets are capped at m - 2 extra
    elements because the embedding dimension never exceeds the multiplicity.
    """
    _check_bounds(max_primitive, multiplicity)
    sink = _Sink(opt)
    if 2 * multiplicity > max_primitive:
        _visit_depth_two(max_primitive, multiplicity, sink.visit)
        return sink.result()
    pool = _naive_candidates(max_primitive, multiplicity)
    for size in range(min(multiplicity - 2, len(pool)) + 1):
        for chosen in combinations(pool, size):
            cand = (multiplicity, *chosen, max_primitive)
            if math.gcd(*cand) == 1 and minimal_generators(cand) == cand:
                sink.visit(cand)
    return sink.result()


def _blocked(bits_rest: int, x: int, top: int) -> bool:
    # x is ruled out as a further primitive next to `top` if x is already a
    # combination of the current generators, if top - x is one (then
    # top = x + (top - x) would stop being primitive), or more generally if
    # top - k*x is one for any k >= 0 (then top lands in the extended monoid).
    if (bits_rest >> x) & 1:
        return True
    rem = top
    while rem >= 0:
        if (bits_rest >> rem) & 1:
            return True
        rem -= x
    return False


def possible_large_primitives(primitives: Iterable[int]) -> tuple[int, ...]:
    """Candidates between the two largest elements that could still be primitives.

    Given a sorted set P with largest element M and second largest p, returns
    the integers in (p, M) that survive three prunes: combinations of P,
    values whose complement to M is a combination, and values that would turn
    M itself into a combination.  No true extension is ever removed: whenever
    some numerical semigroup has all of P plus x in (p, M) among its
    primitives, x survives.
    """
    gens = as_generator_set(primitives)
    if len(gens) < 2:
        raise ValueError("need at least two elements")
    top = gens[-1]
    bits_rest = combination_bits(gens[:-1], top)
    return tuple(
        x for x in range(gens[-2] + 1, top) if not _blocked(bits_rest, x, top)
    )


def _is_minimal(cand: GeneratorSet) -> bool:
    # cand is sorted; the closure of everything below the top element decides
    # both the top's primitivity and every other element's reducibility.
    top = cand[-1]
    bits = combination_bits(cand[:-1], top)
    if (bits >> top) & 1:
        return False
    for q in cand[:-1]:
        for a in range(1, q // 2 + 1):
            if (bits >> a) & 1 and (bits >> (q - a)) & 1:
                return False
    return True


def _complete(base: GeneratorSet, candidates: list[int], visit: Visitor) -> None:
    # Direct completion: choose at most one candidate per residue class mod m
    # (primitives are pairwise incongruent mod m), never exceeding m
    # generators in total, and keep the choices that stay minimal with gcd 1.
    m, top, have = base[0], base[-1], len(base)
    room = m - have
    if room < 1 or not candidates:
        return
    classes: dict[int, list[int]] = {}
    for x in candidates:
        classes.setdefault(x % m, []).append(x)
    class_lists = [classes[r] for r in sorted(classes)]
    body = base[:-1]
    for k in range(1, min(room, len(class_lists)) + 1):
        for chosen in combinations(class_lists, k):
            for extra in product(*chosen):
                cand = body + tuple(sorted(extra)) + (top,)
                if math.gcd(*cand) != 1:
                    continue
                if _is_minimal(cand):
                    visit(cand)


def semigroups_with_given_primitives(
    primitives: Iterable[int], opt: TreeOptions | None = None
) -> EnumerationResult:
    """All numerical semigroups whose primitives extend ``primitives`` upward.

    The result contains every numerical semigroup whose minimal generating
    set is P plus a nonempty choice from ``possible_large_primitives(P)``;
    P itself is not included.
    """
    gens = as_generator_set(primitives)
    if len(gens) < 2:
        raise ValueError("need at least two elements")
    sink = _Sink(opt)
    _complete(gens, list(possible_large_primitives(gens)), sink.visit)
    return sink.result()


def _extend(
    base: GeneratorSet, candidates: list[int], len_cutoff: int, visit: Visitor
) -> None:
    # One tree level: append each candidate r in turn.  Extensions added this
    # way are automatically minimal generating sets (r is not a combination,
    # every smaller generator stays primitive because nothing below r changed,
    # and the blocking test kept the top element primitive), so only the gcd
    # decides whether a node is a numerical semigroup or just a submonoid.
    top = base[-1]
    body = base[:-1]
    for i, r in enumerate(candidates):
        gens = body + (r, top)
        if math.gcd(*gens) == 1:
            visit(gens)
        bits_rest = combination_bits(gens[:-1], top)
        child = [x for x in candidates[i + 1 :] if not _blocked(bits_rest, x, top)]
        if len(child) > len_cutoff:
            _extend(gens, child, len_cutoff, visit)
        else:
            _complete(gens, child, visit)


def enumerate_tree(
    max_primitive: int, multiplicity: int, opt: TreeOptions | None = None
) -> EnumerationResult:
    """Tree enumerator: same set as the brute force, vastly less work.

    For m > M/2 this is the gcd-only subset sweep.  Otherwise the root {m, M}
    is extended by one surviving candidate at a time; subtrees whose candidate
    list has at most ``len_cutoff`` entries are finished by direct completion
    over residue classes instead of deeper recursion.
    """
    _check_bounds(max_primitive, multiplicity)
    sink = _Sink(opt)
    if multiplicity == 1:
        # Multiplicity 1 forces the full set of nonnegative integers, whose
        # only primitive is 1; no semigroup has maximum primitive M > 1.
        return sink.result()
    if 2 * multiplicity > max_primitive:
        _visit_depth_two(max_primitive, multiplicity, sink.visit)
        return sink.result()
    cutoff = (opt or TreeOptions()).resolved_cutoff(max_primitive, multiplicity)
    root = (multiplicity, max_primitive)
    if math.gcd(multiplicity, max_primitive) == 1:
        sink.visit(root)
    bits_rest = combination_bits((multiplicity,), max_primitive)
    root_candidates = [
        x
        for x in range(multiplicity + 1, max_primitive)
        if not _blocked(bits_rest, x, max_primitive)
    ]
    _extend(root, root_candidates, cutoff, sink.visit)
    return sink.result()


def enumerate_all(max_primitive: int, opt: TreeOptions | None = None) -> EnumerationResult:
    """All numerical semigroups with the given maximum primitive.

    Disjoint union over multiplicities of the tree enumerator;
    max primitive 1 yields exactly the full semigroup <1>.
    """
    if max_primitive < 1:
        raise ValueError(f"max primitive must be >= 1, got {max_primitive}")
    sink = _Sink(opt)
    if max_primitive == 1:
        sink.visit((1,))
        return sink.result()
    inner = TreeOptions(
        len_cutoff=None if opt is None else opt.len_cutoff,
        collect=False,
        on_visit=sink.visit,
    )
    for m in range(2, max_primitive):
        enumerate_tree(max_primitive, m, inner)
    return sink.result()


def tree_count(
    max_primitive: int, multiplicity: int, len_cutoff: int | None = None
) -> int:
    """Count |T(M, m)| without materializing the set; a picklable work unit."""
    opt = TreeOptions(len_cutoff=len_cutoff, collect=False)
    return enumerate_tree(max_primitive, multiplicity, opt).count
