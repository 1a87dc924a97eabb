"""Acceptance suite: one test per gating criterion, at its stated tolerance.

Every test prints a PASS line with timing on success (visible with -s); the
test name doubles as the criterion label under -v.  The full published-scale
computation (maximum primitive above 60) is out of desk scale by design and
is covered by the equivalence, identity and verification criteria below
instead.
"""

import csv
import io
import math
import random
import subprocess
import sys
import time
from itertools import combinations

import pytest

from maxprim.core import combination_bits, invariants, membership_table, minimal_generators
from maxprim.counting import (
    depth_two_count,
    divisors,
    frobenius_count,
    frobenius_semigroups_oracle,
    left_elements_map,
)
from maxprim.enumeration import (
    TreeOptions,
    default_len_cutoff,
    enumerate_all,
    enumerate_brute_force,
    enumerate_naive,
    enumerate_tree,
)
from maxprim.tables import KNOWN_COUNTS
from maxprim.wilf import classify_known_cases, verify_wilf_range, wilf_holds

from conftest import coprime_sets


def _run_cli_bytes(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "maxprim", *argv],
        capture_output=True,
        text=True,
        timeout=400,
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_criterion_1_count_table_reproduction_1_to_35(capsys):
    """`count 1..35` matches every published A_n and N_n exactly, single process,
    in under 5 minutes."""
    from maxprim.cli import main

    start = time.perf_counter()
    code = main(["count", "1..35", "--jobs", "1"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "A_n", "N_n"]
    for row in rows[1:]:
        n, a, nn = map(int, row)
        assert (a, nn) == KNOWN_COUNTS[n], f"n={n}: got ({a}, {nn}), want {KNOWN_COUNTS[n]}"
    assert len(rows) - 1 == 35
    assert elapsed < 300, f"took {elapsed:.1f}s, budget 300s"
    with capsys.disabled():
        print(f"\nACCEPTANCE 1 count 1..35 exact vs published table: PASS ({elapsed:.1f}s)")


def test_criterion_3_cross_algorithm_equivalence_to_18(capsys):
    """Brute force, naive and tree enumerators agree for all 2 <= m < M <= 18,
    and the tree is invariant under len in {1, 5, 50, default}."""
    start = time.perf_counter()
    pairs = 0
    for top in range(3, 19):
        for m in range(2, top):
            reference = enumerate_brute_force(top, m).semigroups
            assert enumerate_naive(top, m).semigroups == reference, (top, m)
            for cutoff in (1, 5, 50, default_len_cutoff(top, m)):
                got = enumerate_tree(top, m, TreeOptions(len_cutoff=cutoff)).semigroups
                assert got == reference, (top, m, cutoff)
            pairs += 1
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(
            f"ACCEPTANCE 3 cross-algorithm equivalence on {pairs} (M, m) pairs: "
            f"PASS ({elapsed:.1f}s)"
        )


def test_criterion_4_depth_two_formula_vs_subset_oracle(capsys):
    """The closed-form primitive-depth-2 count equals brute-force subset
    enumeration of (n/2, n] for all 3 <= n <= 32, exactly."""
    start = time.perf_counter()
    for n in range(3, 33):
        pool = range(n // 2 + 1, n)
        direct = 0
        for size in range(len(pool) + 1):
            for chosen in combinations(pool, size):
                if math.gcd(n, *chosen) == 1:
                    direct += 1
        assert depth_two_count(n) == direct, n
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"ACCEPTANCE 4 depth-2 formula vs subset oracle 3..32: PASS ({elapsed:.1f}s)")


def _depth_tagged(n):
    tally = {}

    def tag(gens):
        k = -(-gens[-1] // gens[0])
        tally[k] = tally.get(k, 0) + 1

    enumerate_all(n, TreeOptions(collect=False, on_visit=tag))
    return tally


def test_criterion_5_divisor_identities_and_bijection(capsys):
    """Per-depth Frobenius-side counts equal the divisor sums of per-depth
    max-primitive counts for n <= 14; the divisor-sum reconstruction matches
    the oracle; the left-elements contraction is injective with the claimed
    image for n <= 12."""
    start = time.perf_counter()
    for n in range(1, 15):
        family = frobenius_semigroups_oracle(n)
        by_depth = {}
        for s in family:
            k = s.invariants.depth
            by_depth[k] = by_depth.get(k, 0) + 1
        tagged = {d: _depth_tagged(d) for d in divisors(n)}
        every_k = set(by_depth) | {k for t in tagged.values() for k in t}
        for k in every_k:
            assert by_depth.get(k, 0) == sum(t.get(k, 0) for t in tagged.values()), (n, k)
        counts = {d: sum(tagged[d].values()) for d in tagged}
        assert frobenius_count(n, counts) == len(family), n

    for n in range(1, 13):
        family = frobenius_semigroups_oracle(n)
        for k in sorted({s.invariants.depth for s in family}):
            members = [s for s in family if s.invariants.depth == k]
            images = {left_elements_map(s).generators for s in members}
            assert len(images) == len(members), (n, k, "not injective")
            target = set()
            for d in divisors(n):
                def keep(gens, k=k, sink=target):
                    if -(-gens[-1] // gens[0]) == k:
                        sink.add(gens)
                enumerate_all(d, TreeOptions(collect=False, on_visit=keep))
            assert images == target, (n, k)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(
            "ACCEPTANCE 5 divisor-sum / inversion identities (n<=14) and bijection "
            f"(n<=12): PASS ({elapsed:.1f}s)"
        )


def test_criterion_6_wilf_verification_to_30(capsys):
    """Zero violations over every semigroup with maximum primitive <= 30, with
    per-n totals exactly matching the published counts, in under 2 minutes;
    the two four-generator witnesses at multiplicity 20 verify."""
    start = time.perf_counter()
    reports = verify_wilf_range(1, 30)
    elapsed = time.perf_counter() - start
    total = 0
    for report in reports:
        assert report.violations == (), report
        assert report.total_checked == KNOWN_COUNTS[report.max_primitive][0]
        total += report.total_checked
    assert wilf_holds((20, 21, 22, 24))
    assert wilf_holds((20, 22, 23, 24))
    assert elapsed < 120, f"took {elapsed:.1f}s, budget 120s"
    with capsys.disabled():
        print(
            f"ACCEPTANCE 6 Wilf holds on all {total} semigroups with max primitive "
            f"<= 30: PASS ({elapsed:.1f}s)"
        )


def test_criterion_7_novelty_classifier_witness(capsys):
    """<50,52,53,60> fails all eight known conditions yet satisfies the
    inequality, with the expected invariant margins."""
    start = time.perf_counter()
    gens = (50, 52, 53, 60)
    vec = classify_known_cases(gens)
    assert vec.as_tuple() == (False,) * 8
    assert wilf_holds(gens)
    inv = invariants(gens)
    assert inv.frobenius >= 249
    assert inv.genus > 100
    assert inv.conductor >= 3 * inv.multiplicity
    assert inv.embedding_dimension == 4
    assert 3 * inv.embedding_dimension < inv.multiplicity
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"ACCEPTANCE 7 novelty classifier on <50,52,53,60>: PASS ({elapsed:.1f}s)")


def test_criterion_8_core_invariant_suite_randomized(capsys):
    """Apery invariants, left-count identity, max-primitive complement
    non-membership and minimal-generator idempotence over at least 10^4
    random generator sets with multiplicity <= 20 and values <= 60."""
    start = time.perf_counter()
    rng = random.Random(0x5EED)
    cases = 10_000
    for gens in coprime_sets(rng, cases):
        from maxprim.core import apery_set

        ap = apery_set(gens)
        m = gens[0]
        assert ap.values[0] == 0 and len(ap.values) == m
        bound = max(max(ap.values), m)
        bits = combination_bits(gens, bound)
        for i, w in enumerate(ap.values):
            assert w % m == i
            assert (bits >> w) & 1
            if w >= m:
                assert not (bits >> (w - m)) & 1
        inv = invariants(gens)
        assert inv.frobenius == max(ap.values) - m
        # genus and left count against popcounts of the membership bitset
        members_below_c = (bits & ((1 << inv.conductor) - 1)).bit_count()
        assert inv.genus == inv.conductor - members_below_c
        assert inv.left_count == inv.conductor - inv.genus
        assert inv.left_count == (bits & ((1 << inv.frobenius) - 1)).bit_count()
        # minimal generators: idempotent, and the complement rule holds:
        # for every member x strictly between 0 and the maximum primitive,
        # top - x is a gap (otherwise top would not be primitive)
        reduced = minimal_generators(gens)
        assert minimal_generators(reduced) == reduced
        top = reduced[-1]
        for x in range(1, top):
            if (bits >> x) & 1:
                assert not (bits >> (top - x)) & 1, (gens, x)
    elapsed = time.perf_counter() - start
    assert elapsed < 600
    with capsys.disabled():
        print(
            f"ACCEPTANCE 8 core invariant suite on {cases} random generator sets: "
            f"PASS ({elapsed:.1f}s)"
        )


@pytest.mark.skipif(
    "MAXPRIM_STRETCH" not in __import__("os").environ,
    reason="stretch target (non-gating); set MAXPRIM_STRETCH=1 to run (~4 min)",
)
def test_stretch_count_table_reproduction_to_45(capsys):
    """Non-gating stretch: counts up to 45 match the published table in under
    an hour (measured: a few minutes)."""
    from maxprim.counting import count_by_max_primitive

    start = time.perf_counter()
    for n in range(36, 46):
        got = count_by_max_primitive(n).max_primitive_count
        assert got == KNOWN_COUNTS[n][0], (n, got)
    elapsed = time.perf_counter() - start
    assert elapsed < 3600
    with capsys.disabled():
        print(f"ACCEPTANCE stretch counts 36..45 exact: PASS ({elapsed:.0f}s)")


def test_criterion_9_cli_determinism_across_jobs(capsys):
    """`count 30..30` and `wilf 30..30` emit byte-identical output for
    --jobs 1 and --jobs 4."""
    start = time.perf_counter()
    for command in (("count", "30..30"), ("wilf", "30..30")):
        single = _run_cli_bytes(*command, "--jobs", "1")
        quad = _run_cli_bytes(*command, "--jobs", "4")
        assert single == quad, command
        assert single.endswith("\n")
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"ACCEPTANCE 9 byte-identical output across --jobs: PASS ({elapsed:.1f}s)")
