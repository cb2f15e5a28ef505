#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumlab/gap.hpp"
#include "sumlab/int_set.hpp"
#include "sumlab/sumsets.hpp"

namespace sumlab {

// Arithmetic progression certificate: start, start+diff, ..., length terms,
// all contained in the certified set.
struct ApRun {
    int64_t start = 0;
    int64_t diff = 1;
    int64_t length = 0;
};

struct LongestApOptions {
    int64_t min_diff = 1;
    // Differences above this are not scanned (default: the universe span).
    std::optional<int64_t> max_diff;
    // Extra differences checked besides the ascending scan; used when the
    // span makes a full scan infeasible (e.g. generator differences of a
    // construction).  The result is then the best over scanned differences.
    std::vector<int64_t> extra_diffs;
};

// A maximum-length AP in S over the difference range.  Ties prefer the
// smallest difference, then the smallest start.  Exact for the scanned
// range: the ascending scan stops only once d * best_len exceeds the span,
// after which no longer AP can exist.
//
// Per difference the chain-doubling test runs in O(log^2(len) * N/w) with
// O(N/w) memory: R_m = {x : x, x+d, ..., x+(m-1)d all in S} is rebuilt from
// S by binary composition instead of keeping a table per power of two.
ApRun longest_ap(const IntSet& s, const LongestApOptions& opt = {});

// Longest AP of residues mod n (wrap-around allowed, terms distinct, so the
// length never exceeds n / gcd(d, n)).  A full Z_n reports (0, 1, n).
ApRun longest_ap_mod(const ResidueSet& s, const LongestApOptions& opt = {});

struct FindGapOptions {
    int max_rank = 2;
    int64_t budget = 20000;        // box-growth attempts
    int top_differences = 64;      // candidate differences by frequency
    int64_t pair_sample = 200000;  // difference sampling threshold for big sets
    uint64_t seed = 0x5eedf00d;    // sampling determinism
    LongestApOptions ap;           // options for the exact rank-1 search
};

// Best-found proper GAP contained in S: rank-1 search is exact (longest_ap);
// rank-2 grows boxes over the most frequent positive pairwise differences.
// The certificate is always verified (gap_is_proper + verify_gap_in_set),
// never claimed maximal.  Returns nullopt when nothing of volume >= 2 found.
std::optional<Gap> find_proper_gap(const IntSet& s, const FindGapOptions& opt = {});

struct DoublingProfile {
    std::vector<int64_t> sizes;   // |2^i A|, i = 0..s
    std::vector<double> ratios;   // sizes[i+1]/sizes[i]
    bool truncated = false;       // universe cap hit before s_max
    // Smallest i with ratios[i] <= 2^(d+3/2), or -1.
    int first_flat_index(int d) const;
};

DoublingProfile doubling_profile(const IntSet& a, int s_max, const SumCap& cap = {});

struct LevCoverReport {
    int64_t m = 0;
    int64_t sumset_size = 0;
    double sum_bound = 0;        // 2.1 m
    bool hypothesis = false;     // |A+B| <= 2.1 m
    int64_t cover_diff = 0;      // gcd of consecutive differences of sorted A
    int64_t cover_length = 0;    // minimal AP covering A
    double cover_bound = 0;      // 1.1 m
    bool conclusion = false;     // cover_length <= 1.1 m
    bool violation = false;      // hypothesis && !conclusion
};

// Empirical check of the Lev/Freiman covering statement on a concrete pair.
LevCoverReport lev_cover_check(const IntSet& a, const IntSet& b);

struct FillingResult {
    int64_t h = 0;
    Gap certificate;
};

// Smallest h <= h_max with a proper GAP of rank(P) and cardinality
// >= gamma_prime * |B| inside hB, for B a gamma-dense subset of P.
std::optional<FillingResult> filling_probe(const IntSet& b, const Gap& p, int64_t h_max,
                                           double gamma, double gamma_prime = 0.5,
                                           const FindGapOptions& opt = {});

struct RankReductionReport {
    int64_t best_g = 0;
    ApRun best_run;
    double best_ratio = 0;       // best length / |Q|
    int64_t first_good_g = -1;   // first g with length >= gamma * |Q|
    std::vector<double> ratios;  // per g
};

// For proper rank-2 Q with 2Q improper, scan g <= g_max for a long rank-1 AP
// inside gQ (the paper's rank-reduction direction), reporting the best find.
RankReductionReport rank_reduction_probe(const Gap& q, int64_t g_max, double gamma = 0.125);

}  // namespace sumlab
