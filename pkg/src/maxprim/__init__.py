"""Numerical semigroups with a given maximum primitive.

Exact enumeration and counting of numerical semigroups keyed by their largest
minimal generator, plus verification of Wilf's conjecture over the enumerated
families and a classifier for the known sufficient conditions.
"""

from .core import (
    AperySet,
    GeneratorSet,
    MembershipTable,
    NotASemigroupError,
    NumericalSemigroup,
    SemigroupInvariants,
    apery_set,
    gcd_of_set,
    invariants,
    membership_table,
    minimal_generators,
)
from .enumeration import (
    EnumerationResult,
    TreeOptions,
    default_len_cutoff,
    enumerate_all,
    enumerate_brute_force,
    enumerate_naive,
    enumerate_tree,
    possible_large_primitives,
    semigroups_with_given_primitives,
    tree_count,
)
from .counting import (
    CountRecord,
    count_by_max_primitive,
    depth_two_count,
    divisors,
    frobenius_count,
    frobenius_semigroups_oracle,
    left_elements_map,
    moebius,
    moebius_inversion,
)
from .wilf import (
    KnownCaseVector,
    WilfReport,
    classify_known_cases,
    verify_wilf_range,
    wilf_holds,
)
from .tables import KNOWN_COUNTS

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "CountRecord",
    "EnumerationResult",
    "GeneratorSet",
    "KNOWN_COUNTS",
    "KnownCaseVector",
    "MembershipTable",
    "NotASemigroupError",
    "NumericalSemigroup",
    "SemigroupInvariants",
    "TreeOptions",
    "WilfReport",
    "apery_set",
    "classify_known_cases",
    "count_by_max_primitive",
    "default_len_cutoff",
    "depth_two_count",
    "divisors",
    "enumerate_all",
    "enumerate_brute_force",
    "enumerate_naive",
    "enumerate_tree",
    "frobenius_count",
    "frobenius_semigroups_oracle",
    "gcd_of_set",
    "invariants",
    "left_elements_map",
    "membership_table",
    "minimal_generators",
    "moebius",
    "moebius_inversion",
    "possible_large_primitives",
    "semigroups_with_given_primitives",
    "tree_count",
    "verify_wilf_range",
    "wilf_holds",
]
