"""Sumset structure toolkit.

Thin re-export of the native module: integer/residue set types, the four sum
engines (iterated, distinct-summand, star, subset sums), GAP calculus with
properness certification, longest-AP and proper-GAP finders, the extremal
constructions, and the zero-sum-free / n-small counters.
"""

from _sumlab import (  # noqa: F401
    ApRun,
    DomainError,
    Gap,
    IntSet,
    ResidueSet,
    SeqPrefix,
    ap_in_subset_sums,
    build_planar,
    count_zero_sum_free,
    distinct_sumset,
    find_proper_gap,
    format_gap,
    gap_add,
    gap_cardinality,
    gap_divide,
    gap_enumerate,
    gap_is_proper,
    gap_scale,
    glue_gap2_to_ap,
    greedy_big_sum_subset,
    is_dl_net,
    is_zero_sum_free,
    iterated_sumset,
    longest_ap,
    longest_ap_mod,
    n_small_count,
    pair_representation_counts,
    parse_gap,
    seq_count,
    star_sum,
    subset_sums,
    sumset,
    sumset_mod,
    verify_gap_in_set,
    verify_planar,
)

__all__ = [
    "ApRun",
    "DomainError",
    "Gap",
    "IntSet",
    "ResidueSet",
    "SeqPrefix",
    "ap_in_subset_sums",
    "build_planar",
    "count_zero_sum_free",
    "distinct_sumset",
    "find_proper_gap",
    "format_gap",
    "gap_add",
    "gap_cardinality",
    "gap_divide",
    "gap_enumerate",
    "gap_is_proper",
    "gap_scale",
    "glue_gap2_to_ap",
    "greedy_big_sum_subset",
    "is_dl_net",
    "is_zero_sum_free",
    "iterated_sumset",
    "longest_ap",
    "longest_ap_mod",
    "n_small_count",
    "pair_representation_counts",
    "parse_gap",
    "seq_count",
    "star_sum",
    "subset_sums",
    "sumset",
    "sumset_mod",
    "verify_gap_in_set",
    "verify_planar",
]
