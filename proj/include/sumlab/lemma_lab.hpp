#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumlab/int_set.hpp"

namespace sumlab {

// r(x) = number of pairs {a,b} in A, a != b, with a + b = x.
// Invariant: sum of all r(x) equals C(|A|, 2).
struct RepCounts {
    std::vector<int64_t> r;  // indexed by x in [0, 2N]
    int64_t at(int64_t x) const {
        return (x >= 0 && x < static_cast<int64_t>(r.size())) ? r[static_cast<size_t>(x)] : 0;
    }
    int64_t total() const;
};

RepCounts pair_representation_counts(const IntSet& a);

enum class BucketScheme { dyadic, harmonic };

struct Bucket {
    int index = 0;
    double m_lo = 0, m_hi = 0;  // multiplicity range covered by this bucket
    IntSet members;
    int64_t size = 0;
    // dyadic bookkeeping: the two threshold tests behind the three-way split
    bool prod_ok = false;  // m_i |S_i| > q/(4t)
    bool size_ok = false;  // |S_i| > |A|/40
};

struct BucketChoice {
    int index = 0;
    IntSet set;
    double l1 = 0;   // guaranteed multiplicity of every member
    int64_t t = 0;   // harmonic: 2^(i+1); dyadic: upper multiplicity bound
};

struct BucketReport {
    BucketScheme scheme = BucketScheme::harmonic;
    int64_t card = 0;  // |A|
    double q = 0;      // dyadic: |A|^2/5
    std::vector<Bucket> buckets;
    // Harmonic: smallest i with |S_i| > (2^i/4i)|A|; dyadic: largest index
    // passing both threshold tests.  Never fabricated: empty when no bucket
    // qualifies.
    std::optional<BucketChoice> chosen;
};

struct BucketConfig {
    int alpha = 4;  // harmonic chosen-index cap: i <= (alpha+2) * log2 log2 n
};

// Harmonic scheme (m_i = |A|/(2^i i)) buckets r(x) downward; dyadic scheme
// (m_i = 2^i) buckets upward.  Buckets always partition the support of r.
BucketReport multiplicity_buckets(const IntSet& a, BucketScheme scheme,
                                  const BucketConfig& cfg = {});

struct GreedyBigSumResult {
    std::vector<int64_t> chosen;  // 2T elements, in pick order
    int64_t T = 0;
    int64_t final_size = 0;  // |T* chosen|
};

// Greedy pair growth: with (a_1..a_2i) picked, append the pair (smallest
// unused a, first a' upward) whose full distinct sumset grows by the factor
// 1.1, stopping once |T* B| >= |A|.  A stuck growth step is an error carrying
// the partial state in its message: under the working regime |A| >= 100
// log2 |A| it signals a bug, not an input problem.
GreedyBigSumResult greedy_big_sum_subset(const IntSet& a);

struct PairCoverResult {
    std::vector<std::pair<int64_t, int64_t>> pairs;  // disjoint, each sums to a target
    std::vector<int64_t> pair_targets;               // target hit by each pair
    bool shortfall = false;                          // fewer than k pairs exist greedily
};

// Up to k pairwise-disjoint pairs from A, each summing to some target.
// Greedy order: repeated sweeps over targets by descending r(x) (ties by
// value), one new pair per target per sweep, pairs by smallest available
// element; sweeps continue until k pairs or a sweep adds nothing.
PairCoverResult disjoint_pair_cover(const IntSet& a, const IntSet& targets, int64_t k);

}  // namespace sumlab
