#include "sumlab/sumsets.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "sumlab/detail/bitops.hpp"
#include "sumlab/errors.hpp"

namespace sumlab {

namespace d = detail;

namespace {

IntSet reduce_mod(const IntSet& a, int64_t n) {
    IntSet out(n - 1);
    a.for_each([&](int64_t x) { out.insert(x % n); });
    return out;
}

IntSet sumset_mod(const IntSet& a, const IntSet& b, int64_t n) {
    IntSet out(n - 1);
    if (a.empty() || b.empty()) return out;
    const IntSet& big = a.size() >= b.size() ? a : b;
    const IntSet& small = a.size() >= b.size() ? b : a;
    auto& w = out.words();
    small.for_each([&](int64_t x) { d::rotate_or(w, big.words(), x, n); });
    out.invalidate_caches();
    return out;
}

IntSet iterated_mod(const IntSet& a, int64_t l, int64_t n) {
    IntSet base = reduce_mod(a, n);
    if (base.empty()) return base;
    IntSet s = base;
    int bits = 64 - __builtin_clzll(static_cast<uint64_t>(l));
    for (int j = bits - 2; j >= 0; --j) {
        s = sumset_mod(s, s, n);
        if ((l >> j) & 1) s = sumset_mod(s, base, n);
    }
    return s;
}

// Crossover guard: a small multiple of A can be too ragged for run painting
// (many runs, short ones) while also holding too many elements for
// shifted-ORs; k more +A steps are then cheaper.  k is the multiple S
// currently represents.
bool prefer_ladder(const IntSet& s, const IntSet& a, int64_t k) {
    if (k > 8) return false;
    int64_t r = s.run_count();
    return r * r > 100'000'000 && s.size() > 4 * k * a.size();
}

}  // namespace

IntSet iterated_sumset(const IntSet& a, int64_t l, const SumCap& cap) {
    if (l < 1) throw domain_error("iterated_sumset: l must be >= 1");
    if (cap.modulus) {
        if (*cap.modulus < 2) throw domain_error("iterated_sumset: modulus must be >= 2");
        return iterated_mod(a, l, *cap.modulus);
    }
    if (a.universe_bound() > 0 && l > cap.max_universe / a.universe_bound())
        throw cap_exceeded("iterated_sumset: universe " + std::to_string(l) + " * " +
                           std::to_string(a.universe_bound()) + " exceeds cap " +
                           std::to_string(cap.max_universe));
    if (a.empty()) return IntSet(l * a.universe_bound());
    IntSet s = a;
    int64_t k = 1;
    int bits = 64 - __builtin_clzll(static_cast<uint64_t>(l));
    for (int j = bits - 2; j >= 0; --j) {
        if (prefer_ladder(s, a, k)) {
            for (int64_t i = 0; i < k; ++i) s = sumset(s, a);
        } else {
            s = sumset(s, s);
        }
        k *= 2;
        if ((l >> j) & 1) {
            s = sumset(s, a);
            k += 1;
        }
    }
    return s;
}

IntSet distinct_sumset(const IntSet& a, int64_t l, const SumCap& cap) {
    if (l < 1) throw domain_error("distinct_sumset: l must be >= 1");
    if (l > a.size())
        throw domain_error("distinct_sumset: l = " + std::to_string(l) + " exceeds |A| = " +
                           std::to_string(a.size()));
    auto elems = a.elements();

    if (cap.modulus) {
        int64_t n = *cap.modulus;
        if (n < 2) throw domain_error("distinct_sumset: modulus must be >= 2");
        size_t nw = d::words_for(n);
        std::vector<std::vector<uint64_t>> layer(l + 1, std::vector<uint64_t>(nw, 0));
        layer[0][0] = 1;  // empty sum
        int64_t processed = 0;
        for (int64_t x : elems) {
            ++processed;
            int64_t top = std::min<int64_t>(l, processed);
            for (int64_t j = top; j >= 1; --j) d::rotate_or(layer[j], layer[j - 1], x % n, n);
        }
        IntSet out(n - 1);
        out.words() = std::move(layer[l]);
        out.words().resize(d::words_for(n), 0);
        out.invalidate_caches();
        return out;
    }

    int64_t width = l * a.max();
    if (width > cap.max_universe)
        throw cap_exceeded("distinct_sumset: universe " + std::to_string(width) + " exceeds cap");
    size_t nw = d::words_for(width + 1) + 1;
    std::vector<std::vector<uint64_t>> layer(l + 1, std::vector<uint64_t>(nw, 0));
    layer[0][0] = 1;
    int64_t processed = 0;
    for (int64_t x : elems) {
        ++processed;
        int64_t top = std::min<int64_t>(l, processed);
        // Bits of layer j-1 above width - x are zero, so clipping src is safe.
        size_t src_words = nw - static_cast<size_t>(x >> 6) - 1;
        for (int64_t j = top; j >= 1; --j) d::or_shift(layer[j], layer[j - 1].data(), src_words, x);
    }
    IntSet out(std::max<int64_t>(width, 0));
    auto& w = out.words();
    for (size_t i = 0; i < w.size(); ++i) w[i] = layer[l][i];
    out.invalidate_caches();
    return out;
}

namespace {

void star_dfs(const std::vector<std::vector<int64_t>>& sets, size_t depth,
              std::vector<int64_t>& chosen, int64_t sum, const std::optional<int64_t>& mod,
              IntSet& out) {
    if (depth == sets.size()) {
        int64_t v = sum;
        if (mod) {
            v %= *mod;
            if (v < 0) v += *mod;
        }
        out.insert(v);
        return;
    }
    for (int64_t x : sets[depth]) {
        bool used = false;
        for (int64_t c : chosen) used = used || (c == x);
        if (used) continue;
        chosen.push_back(x);
        star_dfs(sets, depth + 1, chosen, sum + x, mod, out);
        chosen.pop_back();
    }
}

}  // namespace

IntSet star_sum(const std::vector<IntSet>& sets, const SumCap& cap, const StarCaps& star) {
    if (sets.empty()) throw domain_error("star_sum: need at least one set");
    if (static_cast<int64_t>(sets.size()) > star.l_max)
        throw cap_exceeded("star_sum: l = " + std::to_string(sets.size()) + " exceeds l_max = " +
                           std::to_string(star.l_max) + "; use star_sum_sample for a lower bound");
    __int128 work = 1;
    int64_t bound = 0;
    for (const auto& s : sets) {
        work *= std::max<int64_t>(s.size(), 1);
        bound += s.universe_bound();
        if (work > star.work_cap)
            throw cap_exceeded("star_sum: work product exceeds cap " +
                               std::to_string(star.work_cap) +
                               "; use star_sum_sample for a lower bound");
    }
    std::vector<std::vector<int64_t>> elem;
    elem.reserve(sets.size());
    for (const auto& s : sets) elem.push_back(s.elements());
    std::sort(elem.begin(), elem.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });

    IntSet out(cap.modulus ? *cap.modulus - 1 : bound);
    for (const auto& e : elem)
        if (e.empty()) return out;
    std::vector<int64_t> chosen;
    chosen.reserve(sets.size());
    star_dfs(elem, 0, chosen, 0, cap.modulus, out);
    return out;
}

StarLowerBound star_sum_sample(const std::vector<IntSet>& sets, int64_t samples, uint64_t seed,
                               const SumCap& cap) {
    if (sets.empty()) throw domain_error("star_sum_sample: need at least one set");
    int64_t bound = 0;
    std::vector<std::vector<int64_t>> elem;
    for (const auto& s : sets) {
        bound += s.universe_bound();
        elem.push_back(s.elements());
    }
    StarLowerBound r{IntSet(cap.modulus ? *cap.modulus - 1 : bound), samples, false};
    std::mt19937_64 rng(seed);
    for (int64_t t = 0; t < samples; ++t) {
        std::vector<int64_t> chosen;
        int64_t sum = 0;
        bool ok = true;
        for (const auto& e : elem) {
            if (e.empty()) return r;
            int64_t pick = e[rng() % e.size()];
            for (int64_t c : chosen) ok = ok && (c != pick);
            if (!ok) break;
            chosen.push_back(pick);
            sum += pick;
        }
        if (!ok) continue;
        if (cap.modulus) {
            sum %= *cap.modulus;
            if (sum < 0) sum += *cap.modulus;
        }
        r.found.insert(sum);
    }
    return r;
}

IntSet subset_sums(const std::vector<int64_t>& multiset, const SumCap& cap) {
    int64_t total = 0;
    std::map<int64_t, int64_t> mult;
    for (int64_t x : multiset) {
        if (x < 1) throw domain_error("subset_sums: elements must be positive");
        total += x;
        ++mult[x];
    }
    if (cap.modulus) {
        int64_t n = *cap.modulus;
        IntSet reach(n - 1);
        reach.insert(0);
        auto& w = reach.words();
        for (auto [v, c] : mult) {
            // c copies of v: binary pieces v, 2v, 4v, ...
            int64_t left = c;
            for (int64_t p = 1; left > 0; p *= 2) {
                int64_t take = std::min(p, left);
                left -= take;
                std::vector<uint64_t> snapshot = w;
                d::rotate_or(w, snapshot, (take * v) % n, n);
            }
        }
        reach.invalidate_caches();
        return reach;
    }
    if (total > cap.max_universe)
        throw cap_exceeded("subset_sums: total " + std::to_string(total) + " exceeds cap " +
                           std::to_string(cap.max_universe));
    IntSet out(total);
    out.insert(0);
    auto& w = out.words();
    w.resize(w.size() + 1, 0);  // headroom for the carry word of or_shift
    for (auto [v, c] : mult) {
        int64_t left = c;
        for (int64_t p = 1; left > 0; p *= 2) {
            int64_t take = std::min(p, left);
            left -= take;
            int64_t shift = take * v;  // <= total by construction
            std::vector<uint64_t> snapshot = w;
            size_t src_words = w.size() - static_cast<size_t>(shift >> 6) - 1;
            d::or_shift(w, snapshot.data(), src_words, shift);
        }
    }
    w.resize(d::words_for(total + 1));
    out.invalidate_caches();
    return out;
}

IntSet subset_sums(const SeqPrefix& a, const SumCap& cap) { return subset_sums(a.elements(), cap); }

IntSet subset_sums(const IntSet& a, const SumCap& cap) {
    auto e = a.elements();
    if (!e.empty() && e.front() == 0) e.erase(e.begin());  // 0 contributes nothing
    return subset_sums(e, cap);
}

}  // namespace sumlab
