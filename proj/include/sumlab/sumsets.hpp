#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumlab/int_set.hpp"

namespace sumlab {

// Universe/work guard shared by the sum engines.  When modulus is present all
// outputs are reduced mod n and the working universe stays at n.
struct SumCap {
    int64_t max_universe = int64_t{1} << 31;
    std::optional<int64_t> modulus;
};

// Exactly lA, by binary doubling over word-packed shifted-ORs.  Each addition
// picks the cheaper of per-element shifts and run-pair interval painting; the
// sparse-to-dense crossover steps (small multiples of A) fall back to a ladder
// of +A additions, which early on is far cheaper than doubling.
IntSet iterated_sumset(const IntSet& a, int64_t l, const SumCap& cap = {});

// Exactly l*A (sums of l pairwise-distinct elements) via the layered DP:
// elements in increasing order, layer j |= layer j-1 shifted by the element.
IntSet distinct_sumset(const IntSet& a, int64_t l, const SumCap& cap = {});

// Exact star sum {a_1+...+a_l : a_i in sets[i], all a_i pairwise distinct}.
// Depth-first over sets ordered by increasing size, pruning repeated values.
// Memoization keyed on (depth, partial sum) is unsound under distinctness, so
// none is used; instead hard caps guard the work.
struct StarCaps {
    int64_t l_max = 8;
    int64_t work_cap = 100'000'000;  // product of set sizes
};
IntSet star_sum(const std::vector<IntSet>& sets, const SumCap& cap = {}, const StarCaps& star = {});

// Sampling mode: a certified subset of the star sum, flagged as a lower bound.
struct StarLowerBound {
    IntSet found;
    int64_t samples = 0;
    bool exact = false;  // always false: lower-bound certificate only
};
StarLowerBound star_sum_sample(const std::vector<IntSet>& sets, int64_t samples, uint64_t seed,
                               const SumCap& cap = {});

// All finite subset sums (0 included).  Multisets use bounded-multiplicity
// knapsack with binary splitting.
IntSet subset_sums(const std::vector<int64_t>& multiset, const SumCap& cap = {});
IntSet subset_sums(const SeqPrefix& a, const SumCap& cap = {});
IntSet subset_sums(const IntSet& a, const SumCap& cap = {});

}  // namespace sumlab
