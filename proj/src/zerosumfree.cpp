#include "sumlab/zerosumfree.hpp"

#include <cmath>

#include "sumlab/errors.hpp"

namespace sumlab {

bool is_zero_sum_free(const ResidueSet& a) {
    int64_t n = a.modulus();
    if (a.contains(0)) return false;
    if (n <= 64) {
        uint64_t reach = 0;
        uint64_t ring = n == 64 ? ~0ULL : (1ULL << n) - 1;
        bool hit = false;
        a.bits().for_each([&](int64_t x) {
            uint64_t rot = ((reach << x) | (reach >> (n - x))) & ring;
            reach = reach | rot | (1ULL << x);
            hit = hit || (reach & 1);
        });
        return !hit;
    }
    std::vector<char> reach(static_cast<size_t>(n), 0);
    bool hit = false;
    a.bits().for_each([&](int64_t x) {
        if (hit) return;
        std::vector<char> next = reach;
        for (int64_t r = 0; r < n; ++r)
            if (reach[static_cast<size_t>(r)]) next[static_cast<size_t>((r + x) % n)] = 1;
        next[static_cast<size_t>(x)] = 1;
        reach = std::move(next);
        hit = reach[0];
    });
    return !hit;
}

namespace {

struct ZsfSearch {
    int64_t p;
    uint64_t ring;
    uint64_t budget;
    uint64_t nodes = 0;
    uint64_t count = 1;  // the empty set
    int64_t max_size = 0;

    void dfs(int64_t next, uint64_t reach, int64_t size) {
        for (int64_t e = next; e < p; ++e) {
            uint64_t rot = ((reach << e) | (reach >> (p - e))) & ring;
            uint64_t grown = reach | rot | (1ULL << e);
            if (grown & 1) continue;  // subset reaching 0: prune the branch
            if (++nodes > budget)
                throw cap_exceeded("count_zero_sum_free: node budget exhausted at " +
                                   std::to_string(nodes) + " nodes (partial count " +
                                   std::to_string(count) + " withheld)");
            ++count;
            if (size + 1 > max_size) max_size = size + 1;
            dfs(e + 1, grown, size + 1);
        }
    }
};

}  // namespace

ZsfReport count_zero_sum_free(int64_t p, uint64_t node_budget) {
    if (p < 2 || p > 63) throw domain_error("count_zero_sum_free: need 2 <= p <= 63");
    ZsfSearch s{p, p == 63 ? (~0ULL >> 1) : (1ULL << p) - 1, node_budget};
    s.dfs(1, 0, 0);
    ZsfReport r;
    r.p = p;
    r.count = s.count;
    r.max_size = s.max_size;
    r.nodes = s.nodes;
    r.log2_count_over_sqrt = std::log2(static_cast<double>(s.count)) / std::sqrt(static_cast<double>(p));
    return r;
}

std::vector<BigUint> distinct_partition_counts(int64_t n) {
    if (n < 0) throw domain_error("distinct_partition_counts: n must be >= 0");
    std::vector<BigUint> dp(static_cast<size_t>(n) + 1, BigUint(0));
    dp[0] = BigUint(1);
    for (int64_t k = 1; k <= n; ++k)
        for (int64_t m = n; m >= k; --m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - k)];
    return dp;
}

BigUint n_small_count(int64_t n) {
    if (n < 1) throw domain_error("n_small_count: n must be >= 1");
    auto q = distinct_partition_counts(n - 1);
    BigUint total(0);
    for (int64_t m = 0; m < n; ++m) total += q[static_cast<size_t>(m)];
    return total;
}

}  // namespace sumlab
