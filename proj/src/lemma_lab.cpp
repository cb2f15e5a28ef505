#include "sumlab/lemma_lab.hpp"

#include <algorithm>
#include <cmath>

#include "sumlab/detail/bitops.hpp"
#include "sumlab/errors.hpp"

namespace sumlab {

namespace d = detail;

int64_t RepCounts::total() const {
    int64_t t = 0;
    for (int64_t v : r) t += v;
    return t;
}

RepCounts pair_representation_counts(const IntSet& a) {
    RepCounts rc;
    rc.r.assign(static_cast<size_t>(2 * std::max<int64_t>(a.max(), 0) + 1), 0);
    auto e = a.elements();
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) ++rc.r[static_cast<size_t>(e[i] + e[j])];
    return rc;
}

namespace {

IntSet members_in_range(const RepCounts& rc, double lo, double hi, bool closed_hi) {
    // {x : lo <= r(x) < hi}, or <= hi when closed.
    int64_t maxx = static_cast<int64_t>(rc.r.size()) - 1;
    IntSet out(std::max<int64_t>(maxx, 0));
    for (int64_t x = 0; x <= maxx; ++x) {
        double v = static_cast<double>(rc.r[static_cast<size_t>(x)]);
        if (v < 1) continue;
        if (v >= lo && (closed_hi ? v <= hi : v < hi)) out.insert(x);
    }
    return out;
}

}  // namespace

BucketReport multiplicity_buckets(const IntSet& a, BucketScheme scheme, const BucketConfig& cfg) {
    if (a.size() < 16) throw domain_error("multiplicity_buckets: need |A| >= 16");
    BucketReport rep;
    rep.scheme = scheme;
    rep.card = a.size();
    RepCounts rc = pair_representation_counts(a);
    double card = static_cast<double>(rep.card);

    if (scheme == BucketScheme::harmonic) {
        // m_i = |A| / (2^i i), decreasing; S_i = {x : m_{i+1} <= r(x) < m_i}.
        // The top bucket is closed above (r(x) <= |A|/2 = m_1 can be hit).
        auto m = [&](int i) { return card / (std::pow(2.0, i) * i); };
        int i_top = std::max(1, static_cast<int>(std::ceil(std::log2(card))));
        while (m(i_top + 1) >= 1.0) ++i_top;  // totality of the partition
        for (int i = 1; i <= i_top; ++i) {
            Bucket b;
            b.index = i;
            b.m_lo = m(i + 1);
            b.m_hi = m(i);
            b.members = members_in_range(rc, b.m_lo, b.m_hi, /*closed_hi=*/i == 1);
            b.size = b.members.size();
            rep.buckets.push_back(std::move(b));
        }
        double loglog = std::log2(std::max(2.0, std::log2(std::max(4.0, static_cast<double>(
                                                                            a.universe_bound())))));
        int i_cap = std::max(1, static_cast<int>((cfg.alpha + 2) * loglog));
        for (const Bucket& b : rep.buckets) {
            if (b.index > i_cap) break;
            if (static_cast<double>(b.size) > std::pow(2.0, b.index) / (4.0 * b.index) * card) {
                BucketChoice ch;
                ch.index = b.index;
                ch.set = b.members;
                ch.l1 = card / ((b.index + 1) * std::pow(2.0, b.index + 1));
                ch.t = int64_t{1} << (b.index + 1);
                rep.chosen = std::move(ch);
                break;
            }
        }
        return rep;
    }

    // Dyadic: m_i = 2^i, S_i = {x : m_i <= r(x) < m_{i+1}}; i = 0 covers the
    // singly-represented values so the buckets partition the support.
    rep.q = card * card / 5.0;
    int t = 1;
    while (std::pow(2.0, t) < card / 2.0) ++t;  // smallest t with m_t >= |A|/2
    for (int i = 0; i <= t; ++i) {
        Bucket b;
        b.index = i;
        b.m_lo = std::pow(2.0, i);
        b.m_hi = std::pow(2.0, i + 1);
        b.members = members_in_range(rc, b.m_lo, b.m_hi, false);
        b.size = b.members.size();
        b.prod_ok = b.m_lo * static_cast<double>(b.size) > rep.q / (4.0 * t);
        b.size_ok = static_cast<double>(b.size) > card / 40.0;
        rep.buckets.push_back(std::move(b));
    }
    for (auto it = rep.buckets.rbegin(); it != rep.buckets.rend(); ++it) {
        if (it->prod_ok && it->size_ok) {
            BucketChoice ch;
            ch.index = it->index;
            ch.set = it->members;
            ch.l1 = it->m_lo;
            ch.t = static_cast<int64_t>(it->m_hi);
            rep.chosen = std::move(ch);
            break;
        }
    }
    return rep;
}

namespace {

// Distinct-sumset layers for the greedy: layer[j] holds j-element sums of the
// chosen prefix, words sized to the current width.
struct GreedyLayers {
    std::vector<std::vector<uint64_t>> layer;
    size_t nw = 1;

    void ensure(int64_t layers, int64_t width_bits) {
        size_t want = d::words_for(width_bits) + 1;
        if (want > nw) nw = want;
        while (static_cast<int64_t>(layer.size()) < layers) layer.emplace_back();
        for (auto& l : layer) l.resize(nw, 0);
    }

    void append(int64_t x) {
        for (size_t j = layer.size() - 1; j >= 1; --j) {
            size_t src_words = nw - static_cast<size_t>(x >> 6) - 1;
            d::or_shift(layer[j], layer[j - 1].data(), src_words, x);
            if (j == 1) break;
        }
    }
};

}  // namespace

GreedyBigSumResult greedy_big_sum_subset(const IntSet& a) {
    if (a.size() < 4) throw domain_error("greedy_big_sum_subset: need |A| >= 4");
    auto elems = a.elements();
    int64_t target = a.size();
    std::vector<char> used(elems.size(), 0);

    GreedyBigSumResult res;
    // Layers track j-element sums for every j up to the number of chosen
    // elements: a layer added later cannot be backfilled, so all of them
    // advance together.
    GreedyLayers L;
    L.ensure(1, 1);
    L.layer[0][0] = 1;  // empty sum
    int64_t chosen_sum_max = 0;

    auto top_grown_size = [&](int64_t i, int64_t x, int64_t y) {
        // |(i+1)* (chosen + {x,y})| without committing:
        //   L_{i+1} | L_i<<x | L_i<<y | L_{i-1}<<(x+y)
        size_t want = d::words_for(chosen_sum_max + x + y) + 1;
        std::vector<uint64_t> acc(std::max(want, L.nw), 0);
        auto oshift = [&](const std::vector<uint64_t>& src, int64_t s) {
            size_t src_words = acc.size() - static_cast<size_t>(s >> 6) - 1;
            src_words = std::min(src_words, src.size());
            d::or_shift(acc, src.data(), src_words, s);
        };
        if (static_cast<int64_t>(L.layer.size()) > i + 1) oshift(L.layer[i + 1], 0);
        oshift(L.layer[i], x);
        oshift(L.layer[i], y);
        if (i >= 1) oshift(L.layer[i - 1], x + y);
        return d::popcount(acc.data(), acc.size());
    };

    for (;;) {
        int64_t i = res.T;  // pairs picked so far
        int64_t cur = i == 0 ? 1 : d::popcount(L.layer[i].data(), L.nw);
        if (i > 0 && cur >= target) break;

        // Normative choice: a = smallest unused, scan a' upward, accept the
        // first pair achieving the 1.1 growth.
        size_t ai = 0;
        while (ai < elems.size() && used[ai]) ++ai;
        if (ai == elems.size())
            throw domain_error("greedy_big_sum_subset: ran out of elements at T=" +
                               std::to_string(res.T) + ", |T*B|=" + std::to_string(cur));
        bool placed = false;
        for (size_t bi = ai + 1; bi < elems.size() && !placed; ++bi) {
            if (used[bi]) continue;
            int64_t x = elems[ai], y = elems[bi];
            int64_t grown = top_grown_size(i, x, y);
            if (static_cast<double>(grown) >= 1.1 * static_cast<double>(cur)) {
                used[ai] = used[bi] = 1;
                res.chosen.push_back(x);
                res.chosen.push_back(y);
                chosen_sum_max += x + y;
                L.ensure(static_cast<int64_t>(res.chosen.size()) + 1, chosen_sum_max);
                L.append(x);
                L.append(y);
                ++res.T;
                placed = true;
            }
        }
        if (!placed) {
            std::string state = "chosen=[";
            for (size_t k = 0; k < res.chosen.size(); ++k)
                state += (k ? "," : "") + std::to_string(res.chosen[k]);
            state += "]";
            throw domain_error("greedy_big_sum_subset: growth step impossible at T=" +
                               std::to_string(res.T) + " (|T*B|=" + std::to_string(cur) + ", " +
                               state + ")");
        }
    }
    res.final_size = d::popcount(L.layer[res.T].data(), L.nw);
    return res;
}

PairCoverResult disjoint_pair_cover(const IntSet& a, const IntSet& targets, int64_t k) {
    RepCounts rc = pair_representation_counts(a);
    auto tlist = targets.elements();
    for (int64_t t : tlist)
        if (rc.at(t) == 0)
            throw domain_error("disjoint_pair_cover: target " + std::to_string(t) +
                               " has no representation a+b, a != b");
    std::stable_sort(tlist.begin(), tlist.end(),
                     [&](int64_t x, int64_t y) { return rc.at(x) > rc.at(y); });

    PairCoverResult res;
    IntSet avail = a;
    auto elems = a.elements();
    bool progress = true;
    while (progress && static_cast<int64_t>(res.pairs.size()) < k) {
        progress = false;
        for (int64_t t : tlist) {
            if (static_cast<int64_t>(res.pairs.size()) >= k) break;
            for (int64_t x : elems) {
                if (2 * x >= t) break;  // need x < t - x
                int64_t y = t - x;
                if (avail.contains(x) && y <= avail.universe_bound() && avail.contains(y)) {
                    res.pairs.emplace_back(x, y);
                    res.pair_targets.push_back(t);
                    auto& w = avail.words();
                    w[static_cast<size_t>(x >> 6)] &= ~(1ULL << (x & 63));
                    w[static_cast<size_t>(y >> 6)] &= ~(1ULL << (y & 63));
                    avail.invalidate_caches();
                    progress = true;
                    break;
                }
            }
        }
    }
    res.shortfall = static_cast<int64_t>(res.pairs.size()) < k;
    return res;
}

}  // namespace sumlab
