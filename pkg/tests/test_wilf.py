import math
from itertools import combinations

import pytest

from maxprim.core import NumericalSemigroup
from maxprim.enumeration import TreeOptions, enumerate_all
from maxprim.tables import KNOWN_COUNTS
from maxprim.wilf import (
    classify_known_cases,
    is_arithmetic_progression,
    merge_tallies,
    verify_wilf_range,
    wilf_holds,
    wilf_tally,
)


def test_wilf_holds_examples():
    assert wilf_holds((3, 5))  # equality: 2*4 = 8 = c
    assert wilf_holds((1,))  # 0 >= 0
    assert wilf_holds((20, 21, 22, 24))
    assert wilf_holds((20, 22, 23, 24))
    assert wilf_holds(NumericalSemigroup((2, 3)))


def test_arithmetic_progression_detection():
    assert is_arithmetic_progression((5,))
    assert is_arithmetic_progression((4, 9))
    assert is_arithmetic_progression((20, 21, 22, 23))
    assert not is_arithmetic_progression((50, 52, 53, 60))


def test_classifier_on_tiny_semigroup():
    vec = classify_known_cases((2, 3))
    assert vec.e_at_most_3
    assert vec.m_at_most_19
    assert vec.any_true


def test_classifier_on_progression():
    assert classify_known_cases((20, 21, 22, 23)).arithmetic_progression


def test_classifier_all_false_on_novelty_witness():
    s = NumericalSemigroup((50, 52, 53, 60))
    vec = classify_known_cases(s)
    assert vec.as_tuple() == (False,) * 8
    assert not vec.any_true
    assert wilf_holds(s)
    inv = s.invariants
    assert inv.frobenius >= 249
    assert inv.genus > 100
    assert inv.conductor >= 3 * inv.multiplicity
    assert inv.embedding_dimension == 4
    assert 3 * inv.embedding_dimension < inv.multiplicity


def test_novelty_witness_family():
    # Any non-progression subset of [50,60] through 50 and 60 with at least
    # four elements and gcd 1 defeats every known condition yet verifies.
    pool = range(51, 60)
    found = 0
    for size in range(2, 10):
        for middle in combinations(pool, size):
            gens = (50, *middle, 60)
            if math.gcd(*gens) != 1 or is_arithmetic_progression(gens):
                continue
            vec = classify_known_cases(gens)
            assert vec.as_tuple() == (False,) * 8, gens
            assert wilf_holds(gens), gens
            found += 1
    assert found > 400


def test_verify_range_counts_and_violations():
    reports = verify_wilf_range(1, 24)
    assert len(reports) == 24
    for r in reports:
        assert r.violations == ()
        assert r.total_checked == KNOWN_COUNTS[r.max_primitive][0]
    # every semigroup this small matches some known condition
    assert all(r.novel_count == 0 for r in reports)


def test_verify_range_rejects_bad_bounds():
    with pytest.raises(ValueError):
        verify_wilf_range(5, 4)
    with pytest.raises(ValueError):
        verify_wilf_range(0, 3)


def test_full_check_mode_agrees_with_default():
    for n in range(1, 21):
        assert verify_wilf_range(n, n, full_check=True) == verify_wilf_range(n, n)


def test_known_case_skip_is_sound_small():
    # Instance-level consistency: whenever some condition is true, the
    # inequality itself holds too.
    checked = 0

    def check(gens):
        nonlocal checked
        if classify_known_cases(gens).any_true:
            assert wilf_holds(gens), gens
            checked += 1

    for n in range(1, 19):
        enumerate_all(n, TreeOptions(collect=False, on_visit=check))
    assert checked == sum(KNOWN_COUNTS[n][0] for n in range(1, 19))


def test_multiplicity_filter_and_novel_samples():
    reports = verify_wilf_range(60, 60, multiplicity=50)
    (report,) = reports
    assert report.total_checked == 495
    assert report.violations == ()
    assert report.novel_count == 490
    assert (50, 52, 53, 60) in report.novel_samples
    # out-of-range multiplicity just yields empty reports
    empty = verify_wilf_range(10, 10, multiplicity=30)
    assert empty[0].total_checked == 0


def test_tallies_merge_in_order():
    t1 = wilf_tally(24, 20)
    t2 = wilf_tally(24, 21)
    merged = merge_tallies([t1, t2])
    assert merged.total == t1.total + t2.total
    per_m = [wilf_tally(24, m) for m in range(2, 24)]
    assert merge_tallies(per_m).total == KNOWN_COUNTS[24][0]


def test_reports_are_deterministic():
    assert verify_wilf_range(12, 18) == verify_wilf_range(12, 18)
