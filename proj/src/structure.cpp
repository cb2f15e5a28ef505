#include "sumlab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "sumlab/detail/bitops.hpp"
#include "sumlab/errors.hpp"

namespace sumlab {

namespace d = detail;

namespace {

// R_m for stride d: bit x set iff x, x+d, ..., x+(m-1)d are all in S.
// Built by binary composition, O(log m) AND-shift passes, two buffers.
bool build_chain(const IntSet& s, int64_t diff, int64_t m, std::vector<uint64_t>& cur) {
    const auto& sw = s.words();
    cur = sw;
    if (m == 1) return s.size() > 0;
    int bits = 64 - __builtin_clzll(static_cast<uint64_t>(m));
    int64_t v = 1;
    bool any = true;
    for (int j = bits - 2; j >= 0; --j) {
        any = d::and_rshift(cur.data(), cur.size(), cur.data(), cur.size(), v * diff);
        v *= 2;
        if ((m >> j) & 1) {
            any = d::and_rshift(cur.data(), cur.size(), sw.data(), sw.size(), v * diff) && any;
            v += 1;
        }
        if (!any) return false;
    }
    return any;
}

// Longest chain for one difference, plus its smallest start, but only when it
// strictly beats best_len; otherwise {-1,-1} after the cheapest possible
// rejection (ties never win: the ascending scan saw the smaller diff first).
std::pair<int64_t, int64_t> longest_for_diff(const IntSet& s, int64_t diff, int64_t len_cap,
                                             int64_t best_len, std::vector<uint64_t>& scratch) {
    if (len_cap <= best_len) return {-1, -1};
    // Exponential climb on powers of two, keeping only the current level.
    scratch = s.words();
    int64_t v = 1;
    bool alive = true;
    while (alive && 2 * v <= len_cap) {
        alive = d::and_rshift(scratch.data(), scratch.size(), scratch.data(), scratch.size(),
                              v * diff);
        if (alive) v *= 2;
    }
    int64_t lo = v, hi = alive ? len_cap : std::min(len_cap, 2 * v - 1);
    if (hi <= best_len) return {-1, -1};
    if (lo <= best_len) {
        // One probe decides whether this difference can improve at all.
        if (!build_chain(s, diff, best_len + 1, scratch)) return {-1, -1};
        lo = best_len + 1;
    }
    // Binary search the exact maximum, rebuilding R_mid from S each probe.
    while (lo < hi) {
        int64_t mid = lo + (hi - lo + 1) / 2;
        if (build_chain(s, diff, mid, scratch))
            lo = mid;
        else
            hi = mid - 1;
    }
    build_chain(s, diff, lo, scratch);
    int64_t start = d::find_first(scratch.data(), scratch.size());
    return {lo, start};
}

bool better(int64_t len, int64_t diff, int64_t start, const ApRun& best) {
    if (len != best.length) return len > best.length;
    if (diff != best.diff) return diff < best.diff;
    return start < best.start;
}

}  // namespace

ApRun longest_ap(const IntSet& s, const LongestApOptions& opt) {
    if (s.empty()) throw domain_error("longest_ap: set is empty");
    int64_t span = s.max() - s.min();
    if (s.size() == 1) return {s.min(), 1, 1};
    int64_t max_diff = std::min<int64_t>(opt.max_diff.value_or(span), span);
    ApRun best{s.min(), 1, 1};
    std::vector<uint64_t> scratch;
    for (int64_t diff = std::max<int64_t>(opt.min_diff, 1); diff <= max_diff; ++diff) {
        if (diff * best.length > span) break;  // no longer AP fits the span
        auto [len, start] = longest_for_diff(s, diff, span / diff + 1, best.length, scratch);
        if (len > best.length) best = {start, diff, len};
    }
    std::vector<int64_t> extras = opt.extra_diffs;
    std::sort(extras.begin(), extras.end());
    for (int64_t diff : extras) {
        if (diff < 1 || diff > span) continue;
        auto [len, start] = longest_for_diff(s, diff, span / diff + 1, best.length, scratch);
        if (len > best.length) best = {start, diff, len};
    }
    return best;
}

ApRun longest_ap_mod(const ResidueSet& s, const LongestApOptions& opt) {
    if (s.empty()) throw domain_error("longest_ap_mod: set is empty");
    int64_t n = s.modulus();
    if (s.size() == n) return {0, 1, n};  // full Z_n
    const auto& bits = s.bits();
    int64_t max_diff = std::min<int64_t>(opt.max_diff.value_or(n - 1), n - 1);
    ApRun best{bits.min(), 1, 1};
    std::vector<char> in(n, 0);
    bits.for_each([&](int64_t x) { in[static_cast<size_t>(x)] = 1; });
    auto scan_diff = [&](int64_t diff) {
        int64_t g = std::gcd(diff, n);
        int64_t cycle = n / g;
        for (int64_t r = 0; r < g; ++r) {
            // Full cycle in S: length capped at the cycle (terms distinct).
            int64_t x = r;
            bool all = true;
            for (int64_t t = 0; t < cycle && all; ++t) {
                all = in[static_cast<size_t>(x)];
                x += diff;
                if (x >= n) x -= n;
            }
            if (all) {
                if (better(cycle, diff, r, best)) best = {r, diff, cycle};
                continue;
            }
            // Otherwise a run is < cycle; walking two cycles catches wraps.
            int64_t run = 0, cur_start = -1;
            x = r;
            for (int64_t t = 0; t < 2 * cycle; ++t) {
                if (in[static_cast<size_t>(x)]) {
                    if (run == 0) cur_start = x;
                    ++run;
                    if (run <= cycle && better(run, diff, cur_start, best))
                        best = {cur_start, diff, run};
                } else {
                    run = 0;
                }
                x += diff;
                if (x >= n) x -= n;
            }
        }
    };
    for (int64_t diff = std::max<int64_t>(opt.min_diff, 1); diff <= max_diff; ++diff)
        scan_diff(diff);
    for (int64_t diff : opt.extra_diffs)
        if (diff >= 1 && diff < n) scan_diff(diff);
    return best;
}

namespace {

std::vector<int64_t> frequent_differences(const IntSet& s, const FindGapOptions& opt) {
    auto elems = s.elements();
    std::unordered_map<int64_t, int64_t> count;
    int64_t m = static_cast<int64_t>(elems.size());
    if (m * (m - 1) / 2 <= opt.pair_sample) {
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = i + 1; j < elems.size(); ++j) ++count[elems[j] - elems[i]];
    } else {
        std::mt19937_64 rng(opt.seed);
        for (int64_t t = 0; t < opt.pair_sample; ++t) {
            int64_t i = static_cast<int64_t>(rng() % elems.size());
            int64_t j = static_cast<int64_t>(rng() % elems.size());
            if (elems[i] == elems[j]) continue;
            ++count[std::abs(elems[i] - elems[j])];
        }
    }
    std::vector<std::pair<int64_t, int64_t>> by_freq(count.begin(), count.end());
    std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<int64_t> out;
    for (const auto& [diff, c] : by_freq) {
        if (static_cast<int>(out.size()) >= opt.top_differences) break;
        out.push_back(diff);
    }
    return out;
}

// Column {base + x1*d1 + j*d2 : j in [0, n2]} fully inside S?
bool column_in(const IntSet& s, int64_t base, int64_t d2, int64_t n2) {
    for (int64_t j = 0; j <= n2; ++j) {
        int64_t v = base + j * d2;
        if (v < 0 || !s.contains(v)) return false;
    }
    return true;
}

// Rank-2 properness without enumeration: the minimal vanishing direction of
// (d1, d2) is (d2/g, -d1/g); improper iff it fits the box.
bool box_proper(int64_t d1, int64_t d2, int64_t n1, int64_t n2) {
    int64_t g = std::gcd(d1, d2);
    return !(d2 / g <= n1 && d1 / g <= n2);
}

struct GrownBox {
    int64_t base, n1, n2;
};

GrownBox grow_box(const IntSet& s, int64_t anchor, int64_t d1, int64_t d2, int64_t& budget) {
    GrownBox box{anchor, 0, 0};
    bool grew = true;
    while (grew && budget > 0) {
        grew = false;
        // Forward in d1.
        if (budget > 0 && box_proper(d1, d2, box.n1 + 1, box.n2) &&
            column_in(s, box.base + (box.n1 + 1) * d1, d2, box.n2)) {
            ++box.n1;
            grew = true;
        }
        --budget;
        // Forward in d2.
        if (budget > 0 && box_proper(d1, d2, box.n1, box.n2 + 1)) {
            bool ok = true;
            for (int64_t i = 0; i <= box.n1 && ok; ++i)
                ok = s.contains(box.base + i * d1 + (box.n2 + 1) * d2);
            if (ok) {
                ++box.n2;
                grew = true;
            }
        }
        --budget;
        // Backward in d1 (move the base).
        if (budget > 0 && box.base >= d1 && box_proper(d1, d2, box.n1 + 1, box.n2) &&
            column_in(s, box.base - d1, d2, box.n2)) {
            box.base -= d1;
            ++box.n1;
            grew = true;
        }
        --budget;
        // Backward in d2.
        if (budget > 0 && box.base >= d2 && box_proper(d1, d2, box.n1, box.n2 + 1)) {
            bool ok = true;
            for (int64_t i = 0; i <= box.n1 && ok; ++i)
                ok = s.contains(box.base - d2 + i * d1);
            if (ok) {
                box.base -= d2;
                ++box.n2;
                grew = true;
            }
        }
        --budget;
    }
    return box;
}

}  // namespace

std::optional<Gap> find_proper_gap(const IntSet& s, const FindGapOptions& opt) {
    if (s.empty()) return std::nullopt;
    std::optional<Gap> best;
    int64_t best_vol = 1;  // demand volume >= 2

    // Rank 1: exact.
    {
        ApRun run = longest_ap(s, opt.ap);
        if (run.length >= 3) {  // volume = length - 1 >= 2
            best = Gap{run.start, {run.diff}, {run.length - 1}};
            best_vol = run.length - 1;
        }
    }
    if (opt.max_rank < 2) return best;

    auto diffs = frequent_differences(s, opt);
    // Anchor candidates shared across difference pairs: a few low elements.
    std::vector<int64_t> low;
    for (const auto& [a, b] : s.runs()) {
        for (int64_t x = a; x <= b && static_cast<int64_t>(low.size()) < 512; ++x) low.push_back(x);
        if (static_cast<int64_t>(low.size()) >= 512) break;
    }
    int64_t budget = opt.budget;
    for (size_t i = 0; i < diffs.size() && budget > 0; ++i) {
        for (size_t j = 0; j < diffs.size() && budget > 0; ++j) {
            if (i == j) continue;
            int64_t d1 = diffs[i], d2 = diffs[j];
            // Anchors: the set minimum, plus the first low element with both
            // forward neighbours present.
            std::vector<int64_t> anchors{s.min()};
            for (int64_t x : low) {
                if (x != anchors[0] && s.contains(x + d1) && s.contains(x + d2)) {
                    anchors.push_back(x);
                    break;
                }
            }
            for (int64_t anchor : anchors) {
                if (budget <= 0) break;
                GrownBox box = grow_box(s, anchor, d1, d2, budget);
                int64_t vol = box.n1 * box.n2;
                if (vol > best_vol) {
                    Gap g{box.base, {d1, d2}, {box.n1, box.n2}};
                    if (gap_is_proper(g).proper && verify_gap_in_set(g, s)) {
                        best = g;
                        best_vol = vol;
                    }
                }
            }
        }
    }
    return best;
}

int DoublingProfile::first_flat_index(int d) const {
    double bound = std::pow(2.0, d + 1.5);
    for (size_t i = 0; i < ratios.size(); ++i)
        if (ratios[i] <= bound) return static_cast<int>(i);
    return -1;
}

DoublingProfile doubling_profile(const IntSet& a, int s_max, const SumCap& cap) {
    if (a.empty()) throw domain_error("doubling_profile: set is empty");
    DoublingProfile p;
    IntSet cur = a;
    p.sizes.push_back(cur.size());
    for (int i = 0; i < s_max; ++i) {
        if (!cap.modulus && cur.universe_bound() > cap.max_universe / 2) {
            p.truncated = true;
            break;
        }
        cur = cap.modulus ? iterated_sumset(cur, 2, cap) : sumset(cur, cur);
        p.sizes.push_back(cur.size());
        p.ratios.push_back(static_cast<double>(p.sizes[i + 1]) / static_cast<double>(p.sizes[i]));
    }
    return p;
}

LevCoverReport lev_cover_check(const IntSet& a, const IntSet& b) {
    if (a.size() != b.size()) throw domain_error("lev_cover_check: |A| != |B|");
    if (a.empty()) throw domain_error("lev_cover_check: sets are empty");
    LevCoverReport r;
    r.m = a.size();
    r.sumset_size = sumset(a, b).size();
    r.sum_bound = 2.1 * static_cast<double>(r.m);
    r.hypothesis = static_cast<double>(r.sumset_size) <= r.sum_bound;
    auto e = a.elements();
    int64_t g = 0;
    for (size_t i = 1; i < e.size(); ++i) g = std::gcd(g, e[i] - e[i - 1]);
    r.cover_diff = g;
    r.cover_length = g > 0 ? (e.back() - e.front()) / g + 1 : 1;
    r.cover_bound = 1.1 * static_cast<double>(r.m);
    r.conclusion = static_cast<double>(r.cover_length) <= r.cover_bound;
    r.violation = r.hypothesis && !r.conclusion;
    return r;
}

std::optional<FillingResult> filling_probe(const IntSet& b, const Gap& p, int64_t h_max,
                                           double gamma, double gamma_prime,
                                           const FindGapOptions& opt) {
    IntSet pset = gap_enumerate(p);
    if (!b.is_subset_of(pset)) throw domain_error("filling_probe: B is not a subset of P");
    if (static_cast<double>(b.size()) < gamma * static_cast<double>(p.volume()))
        throw domain_error("filling_probe: |B| < gamma * Vol(P)");
    FindGapOptions o = opt;
    o.max_rank = p.rank();
    for (int64_t h = 1; h <= h_max; ++h) {
        IntSet hb = iterated_sumset(b, h);
        auto g = find_proper_gap(hb, o);
        if (g && g->rank() == p.rank() &&
            static_cast<double>(g->box_size()) >= gamma_prime * static_cast<double>(b.size()))
            return FillingResult{h, *g};
    }
    return std::nullopt;
}

RankReductionReport rank_reduction_probe(const Gap& q, int64_t g_max, double gamma) {
    if (q.rank() != 2) throw domain_error("rank_reduction_probe: Q must have rank 2");
    if (!gap_is_proper(q).proper) throw domain_error("rank_reduction_probe: Q must be proper");
    if (gap_is_proper(gap_scale(q, 2)).proper)
        throw domain_error("rank_reduction_probe: 2Q must not be proper");
    double q_card = static_cast<double>(q.box_size());  // |Q| = |B_Q| for proper Q
    RankReductionReport r;
    IntSet one = gap_enumerate(gap_translate_nonneg(q));  // probe is translation-invariant
    IntSet cur = one;
    for (int64_t g = 1; g <= g_max; ++g) {
        if (g > 1) cur = sumset(cur, one);
        ApRun run = longest_ap(cur);
        double ratio = static_cast<double>(run.length) / q_card;
        r.ratios.push_back(ratio);
        if (ratio > r.best_ratio) {
            r.best_ratio = ratio;
            r.best_run = run;
            r.best_g = g;
        }
        if (r.first_good_g < 0 && static_cast<double>(run.length) >= gamma * q_card)
            r.first_good_g = g;
    }
    return r;
}

}  // namespace sumlab
