#include "sumlab/completeness.hpp"

#include <algorithm>
#include <numeric>

#include "sumlab/errors.hpp"

namespace sumlab {

ObstructionReport erdos_obstruction(const SeqPrefix& a, size_t tail_from) {
    const auto& e = a.elements();
    if (tail_from < 1 || tail_from > e.size())
        throw domain_error("erdos_obstruction: tail_from outside the prefix");
    ObstructionReport r;
    r.tail_from = tail_from;
    r.prefix_len = e.size();
    int64_t prefix_sum = 0;
    for (size_t i = 0; i + 1 < tail_from; ++i) prefix_sum += e[i];
    for (size_t i = tail_from - 1; i < e.size(); ++i) {
        r.gaps.push_back(e[i] - prefix_sum);
        prefix_sum += e[i];
    }
    r.max_gap = *std::max_element(r.gaps.begin(), r.gaps.end());
    r.increasing_tail = r.gaps.size() >= 2;
    for (size_t i = 1; i < r.gaps.size(); ++i)
        r.increasing_tail = r.increasing_tail && r.gaps[i] > r.gaps[i - 1];
    r.obstruction = r.increasing_tail && r.gaps.back() > 0;
    return r;
}

GrahamReport graham_gap_check(const SeqPrefix& y, size_t m0, const SumCap& cap) {
    const auto& e = y.elements();
    if (e.empty()) throw domain_error("graham_gap_check: empty prefix");
    if (m0 < 1) throw domain_error("graham_gap_check: m0 must be >= 1");
    GrahamReport r;
    r.prefix_len = e.size();
    r.total = y.total();
    r.hypothesis_ok = true;
    int64_t sum = 0;
    for (size_t m = 1; m <= e.size(); ++m) {
        sum += e[m - 1];
        if (m >= m0 && m < e.size() && e[m] > sum) {
            r.hypothesis_ok = false;
            r.first_violation_m = static_cast<int64_t>(m);
            break;
        }
    }
    IntSet s = subset_sums(y, cap);
    r.mid_lo = r.total / 4;
    r.mid_hi = 3 * r.total / 4;
    int64_t prev = -1, L = 0;
    s.for_each([&](int64_t v) {
        if (v < r.mid_lo || v > r.mid_hi) return;
        if (prev >= 0) L = std::max(L, v - prev);
        prev = v;
    });
    r.L_mid = L;
    return r;
}

bool is_dl_net(const IntSet& b, const NetParams& params) {
    if (b.size() < 2) throw domain_error("is_dl_net: need |B| >= 2");
    if (params.d < 1 || params.L < 1) throw domain_error("is_dl_net: need d >= 1, L >= 1");
    auto e = b.elements();
    for (size_t i = 1; i < e.size(); ++i) {
        int64_t gap = e[i] - e[i - 1];
        if (gap >= params.L || gap % params.d != 0) return false;
    }
    return true;
}

namespace {

int64_t mod_inverse(int64_t a, int64_t m) {
    // extended gcd; gcd(a, m) must be 1
    int64_t old_r = ((a % m) + m) % m, r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tr = old_r - q * r;
        old_r = r;
        r = tr;
        int64_t ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    return ((old_s % m) + m) % m;
}

}  // namespace

ApRun glue_gap2_to_ap(const Gap& p) {
    if (p.rank() != 2) throw domain_error("glue_gap2_to_ap: rank must be 2");
    int64_t a1 = p.diffs[0], a2 = p.diffs[1];
    int64_t l1 = p.lengths[0], l2 = p.lengths[1];
    if (a1 <= 0 || a2 <= 0) throw domain_error("glue_gap2_to_ap: differences must be positive");
    if (l1 < 5 * a2 || l2 < 5 * a1)
        throw domain_error("glue_gap2_to_ap: hypothesis l1 >= 5*a2, l2 >= 5*a1 unmet (l1=" +
                           std::to_string(l1) + ", a2=" + std::to_string(a2) + ", l2=" +
                           std::to_string(l2) + ", a1=" + std::to_string(a1) + ")");
    int64_t g = std::gcd(a1, a2);
    int64_t u = a1 / g, v = a2 / g;
    int64_t inv = v == 1 ? 0 : mod_inverse(u % v, v);
    // t*g is in P iff some x1 in [0,l1], x2 in [0,l2] solves x1 u + x2 v = t;
    // x1 is pinned mod v, so representability is an O(1) window test.
    auto representable = [&](int64_t t) {
        int64_t lo = std::max<int64_t>(0, (t - v * l2 + u - 1) / u);
        int64_t hi = std::min(l1, t / u);
        if (lo > hi) return false;
        if (v == 1) return true;
        int64_t c = (t % v) * inv % v;
        int64_t first = lo + ((c - lo) % v + v) % v;
        return first <= hi;
    };
    int64_t t_max = u * l1 + v * l2;
    int64_t best_len = 0, best_start = 0, run = 0;
    for (int64_t t = 0; t <= t_max; ++t) {
        if (representable(t)) {
            ++run;
            if (run > best_len) {
                best_len = run;
                best_start = t - run + 1;
            }
        } else {
            run = 0;
        }
    }
    return {p.base + g * best_start, g, best_len};
}

namespace {

ApInSubsetSums ap_report(IntSet s, int64_t n) {
    ApInSubsetSums r;
    r.target_n = n;
    r.subset_sum_count = s.size();
    r.run = longest_ap(s);
    r.reaches = r.run.length >= n;
    return r;
}

}  // namespace

ApInSubsetSums ap_in_subset_sums(const SeqPrefix& a, int64_t n, const SumCap& cap) {
    return ap_report(subset_sums(a, cap), n);
}

ApInSubsetSums ap_in_subset_sums(const IntSet& a, int64_t n, const SumCap& cap) {
    return ap_report(subset_sums(a, cap), n);
}

GoodPartitionReport good_partition_probe(const SeqPrefix& a, int depth, const SumCap& cap) {
    const auto& e = a.elements();
    GoodPartitionReport rep;
    rep.prefix_len = e.size();
    if (depth < 1) throw domain_error("good_partition_probe: depth must be >= 1");

    // Odd/even index split (1-based, as the sequence is written).
    std::vector<int64_t> odd, even;
    for (size_t i = 0; i < e.size(); ++i) (i % 2 == 0 ? odd : even).push_back(e[i]);

    // A'' growth condition: sum_{j<i} b_j - b_i over the tail half.
    {
        std::vector<int64_t> margins;
        int64_t sum = 0;
        for (size_t i = 0; i < even.size(); ++i) {
            if (i >= 1) margins.push_back(sum - even[i]);
            sum += even[i];
        }
        if (margins.empty()) {
            rep.growth_ok = false;
            rep.stage_marker = "A'' too short";
        } else {
            size_t half = margins.size() / 2;
            rep.min_tail_margin = *std::min_element(margins.begin() + half, margins.end());
            rep.growth_ok = rep.min_tail_margin > 0 && margins.back() >= margins[half];
        }
    }

    size_t m0 = odd.size() >> depth;
    if (m0 < 1) {
        rep.stage_marker = "prefix too short for depth";
        return rep;
    }

    auto block = [&](size_t lo, size_t hi) {
        return SeqPrefix(std::vector<int64_t>(odd.begin() + lo, odd.begin() + hi));
    };

    ApRun chain;
    bool chain_ok = true;
    for (int i = 0; i <= depth && chain_ok; ++i) {
        size_t lo = i == 0 ? 0 : (m0 << (i - 1));
        size_t hi = std::min(odd.size(), m0 << i);
        if (i == 0) hi = m0;
        GoodPartitionStage st;
        st.index = i;
        st.block_begin = lo;
        st.block_end = hi;
        st.block_ap = ap_in_subset_sums(block(lo, hi), 1, cap).run;
        if (i == 0) {
            chain = st.block_ap;
            st.glued = true;
            st.chain_ap = chain;
        } else {
            Gap g{chain.start + st.block_ap.start,
                  {chain.diff, st.block_ap.diff},
                  {chain.length - 1, st.block_ap.length - 1}};
            if (g.lengths[0] >= 5 * g.diffs[1] && g.lengths[1] >= 5 * g.diffs[0] &&
                g.lengths[0] >= 1 && g.lengths[1] >= 1) {
                chain = glue_gap2_to_ap(g);
                st.glued = true;
                st.chain_ap = chain;
            } else {
                st.glued = false;
                st.note = "glue hypothesis unmet at stage " + std::to_string(i);
                rep.stage_marker = st.note;
                chain_ok = false;
            }
        }
        rep.stages.push_back(std::move(st));
    }
    rep.stabilized_diff = chain.diff;
    rep.longest_chain = chain;
    rep.complete = chain_ok && static_cast<int>(rep.stages.size()) == depth + 1;
    return rep;
}

}  // namespace sumlab
