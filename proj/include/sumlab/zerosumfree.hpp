#pragma once

#include <cstdint>

#include "sumlab/bigint.hpp"
#include "sumlab/int_set.hpp"

namespace sumlab {

// No nonempty subset of A sums to 0 mod n.  Subset-sum reachability over Z_n;
// any set containing 0 fails immediately.
bool is_zero_sum_free(const ResidueSet& a);

struct ZsfReport {
    int64_t p = 0;
    uint64_t count = 0;    // zero-sum-free subsets of Z_p; empty set included
    int64_t max_size = 0;  // largest zero-sum-free set reached by the search
    double log2_count_over_sqrt = 0;
    uint64_t nodes = 0;  // search nodes visited
    bool empty_set_included = true;  // stated so counts stay comparable
};

// Exact count by pruned backtracking over elements of Z_p \ {0} in increasing
// order, carrying the reachable-residue mask and cutting any branch that
// reaches 0.  Refuses (never estimates) when the node budget runs out.
ZsfReport count_zero_sum_free(int64_t p, uint64_t node_budget = 1'000'000'000);

// Number of finite sets of distinct positive integers with sum < n:
// sum_{m<n} q(m) with q the distinct-part partition counts.
BigUint n_small_count(int64_t n);

// q(0..n): q(m) = number of partitions of m into distinct parts.
std::vector<BigUint> distinct_partition_counts(int64_t n);

}  // namespace sumlab
