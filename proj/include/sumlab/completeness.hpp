#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumlab/gap.hpp"
#include "sumlab/int_set.hpp"
#include "sumlab/structure.hpp"
#include "sumlab/sumsets.hpp"

namespace sumlab {

struct NetParams {
    int64_t d = 1;  // divisor
    int64_t L = 1;  // gap bound
};

// Finite-prefix proxy for Erdos' obstruction: g_i = a_i - sum_{j<i} a_j on the
// tail.  A growing tail rules out subcompleteness of any extension.
struct ObstructionReport {
    size_t tail_from = 1;   // 1-based index the tail starts at
    size_t prefix_len = 0;  // finite-prefix proxy: the examined prefix length
    std::vector<int64_t> gaps;
    int64_t max_gap = 0;
    bool increasing_tail = false;  // g strictly increasing over the tail
    bool obstruction = false;      // increasing tail with positive final gap
};

ObstructionReport erdos_obstruction(const SeqPrefix& a, size_t tail_from);

// Graham's gap observation on a prefix: the hypothesis y_{m+1} <= sum_{i<=m}
// y_i checked for m >= m0, and the max consecutive gap L of S_Y measured over
// the middle 50% of its range (finite prefixes necessarily fray at the ends).
struct GrahamReport {
    bool hypothesis_ok = false;
    int64_t first_violation_m = -1;  // 1-based m with y_{m+1} > sum, or -1
    int64_t L_mid = 0;
    int64_t mid_lo = 0, mid_hi = 0;
    size_t prefix_len = 0;
    int64_t total = 0;
};

GrahamReport graham_gap_check(const SeqPrefix& y, size_t m0, const SumCap& cap = {});

// (d,L)-net: consecutive sorted gaps all < L and divisible by d.
bool is_dl_net(const IntSet& b, const NetParams& params);

// Lemma: a rank-2 GAP {x1 a1 + x2 a2 : 0 <= xi <= li} with a1,a2 > 0 and
// l_i >= 5 a_{3-i} contains an AP of length l1+l2 with difference
// gcd(a1,a2).  Returns the longest such run, found constructively by an O(1)
// per-term representability test; every term lies in the GAP by construction.
ApRun glue_gap2_to_ap(const Gap& p);

struct ApInSubsetSums {
    ApRun run;
    int64_t target_n = 0;
    bool reaches = false;  // run.length >= target_n
    int64_t subset_sum_count = 0;
};

ApInSubsetSums ap_in_subset_sums(const SeqPrefix& a, int64_t n, const SumCap& cap = {});
ApInSubsetSums ap_in_subset_sums(const IntSet& a, int64_t n, const SumCap& cap = {});

// One stage of the good-partition pipeline: a dyadic block of A', its
// subset-sum AP, and the glue with the chain so far.
struct GoodPartitionStage {
    int index = 0;
    size_t block_begin = 0, block_end = 0;  // element indices into A'
    ApRun block_ap;
    bool glued = false;
    ApRun chain_ap;  // after gluing this block
    std::string note;
};

struct GoodPartitionReport {
    size_t prefix_len = 0;  // finite-prefix proxy
    // A'' condition: sum_{j<i} b_j - b_i margins over the tail
    bool growth_ok = false;
    int64_t min_tail_margin = 0;
    std::vector<GoodPartitionStage> stages;
    int64_t stabilized_diff = 0;
    ApRun longest_chain;
    bool complete = false;     // all requested stages ran and glued
    std::string stage_marker;  // where a partial run stopped
};

// Splits A into odd-index A' and even-index A'', checks the A'' growth
// condition, runs ap_in_subset_sums per dyadic block of A', and glues the
// per-block APs through rank-2 GAPs, tracking the difference chain (each
// stage's difference divides the previous one).
GoodPartitionReport good_partition_probe(const SeqPrefix& a, int depth, const SumCap& cap = {});

}  // namespace sumlab
