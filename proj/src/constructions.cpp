#include "sumlab/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "sumlab/errors.hpp"
#include "sumlab/sumsets.hpp"

namespace sumlab {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

// floor(x^(1/k)) with integer verification around the float estimate.
int64_t iroot(int64_t x, int k) {
    if (k == 1 || x <= 1) return x;
    int64_t r = static_cast<int64_t>(std::floor(std::pow(static_cast<double>(x), 1.0 / k)));
    auto pow_le = [&](int64_t v) {
        __int128 acc = 1;
        for (int i = 0; i < k; ++i) {
            acc *= v;
            if (acc > x) return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

// floor(base^((i-2)/(d-1))): the float estimate corrected against the exact
// integer relation b_i^(d-1) <= base^(i-2).  base is n/(d m) (n/(d l m) in
// the modular case), so consecutive b_i ratios are ~ a^(1/(d-1)), which is
// what makes the small-coefficient relation sum r_i a_i = 0 impossible.
int64_t b_power(int64_t base, int i, int d) {
    long double e = static_cast<long double>(i - 2) / static_cast<long double>(d - 1);
    int64_t v = static_cast<int64_t>(std::floor(std::pow(static_cast<long double>(base), e)));
    auto ok = [&](int64_t c) {
        if (c < 0) return false;
        __int128 lhs = 1, rhs = 1;
        for (int t = 0; t < d - 1; ++t) lhs *= c;
        for (int t = 0; t < i - 2; ++t) rhs *= base;
        return lhs <= rhs;
    };
    while (v > 0 && !ok(v)) --v;
    while (ok(v + 1)) ++v;
    return v;
}

// Enumerates {sum a_i x_i : 1 <= x_i <= m} (values, possibly with repeats).
template <typename F>
void scan_lattice(const std::vector<int64_t>& diffs, int64_t m, F&& f) {
    int d = static_cast<int>(diffs.size());
    std::vector<int64_t> x(d, 1);
    int64_t val = 0;
    for (int64_t a : diffs) val += a;
    for (;;) {
        f(val);
        int i = d - 1;
        while (i >= 0 && x[i] == m) {
            val -= (x[i] - 1) * diffs[i];
            x[i] = 1;
            --i;
        }
        if (i < 0) return;
        ++x[i];
        val += diffs[i];
    }
}

void check_growth_condition(int64_t a, int d, double delta, int64_t l, int64_t m) {
    long double lhs = (1.0L - delta / 3.0L) *
                      std::pow(static_cast<long double>(a), 1.0L / static_cast<long double>(d - 1));
    long double rhs = 2.0L * static_cast<long double>(l) * static_cast<long double>(m);
    if (lhs < rhs)
        throw domain_error("growth condition violated for l=" + std::to_string(l) +
                           ": (1-delta/3)*a^(1/(d-1)) = " + std::to_string(static_cast<double>(lhs)) +
                           " < 2*l*m = " + std::to_string(static_cast<double>(rhs)));
}

}  // namespace

Construction build_planar(int64_t n, int64_t m, std::optional<int64_t> l) {
    if (m < 2) throw domain_error("build_planar: m must be >= 2");
    int64_t top = n / (2 * m);
    int64_t p2 = 0;
    for (int64_t p = top; p > m; --p) {
        if (is_prime(p)) {
            p2 = p;
            break;
        }
    }
    int64_t p1 = 0;
    for (int64_t p = p2 - 1; p >= 2; --p) {
        if (is_prime(p)) {
            p1 = p;
            break;
        }
    }
    if (p2 == 0 || p1 == 0)
        throw domain_error("build_planar: no prime pair with m < p1 < p2 <= " + std::to_string(top) +
                           " (search window (" + std::to_string(m) + ", " + std::to_string(top) +
                           "])");
    // The no-long-AP argument needs coordinate combinations below p2, i.e.
    // 2 l m <= p2; an oversized l is refused like the general builder does.
    if (l && 2 * *l * m > p2)
        throw domain_error("build_planar: 2*l*m = " + std::to_string(2 * *l * m) +
                           " exceeds p2 = " + std::to_string(p2) + " (l too large for n, m)");
    ConstructionParams params;
    params.kind = "planar";
    params.d = 2;
    params.n = n;
    params.m = m;
    params.l = l;
    params.a = p1;
    params.b = p2;
    params.diffs = {p1, p2};
    IntSet set((p1 + p2) * m);
    scan_lattice(params.diffs, m, [&](int64_t v) { set.insert(v); });
    return {std::move(set), std::move(params)};
}

Construction build_general(int d, int64_t n, int64_t m, double delta, std::optional<int64_t> l) {
    if (d < 2) throw domain_error("build_general: d must be >= 2");
    if (m < 2) throw domain_error("build_general: m must be >= 2");
    if (delta <= 0 || delta >= 1) throw domain_error("build_general: delta must be in (0,1)");
    ConstructionParams params;
    params.kind = "general";
    params.d = d;
    params.n = n;
    params.m = m;
    params.delta = delta;
    params.l = l;
    params.a = static_cast<int64_t>(
        std::floor((1.0L - delta / 3.0L) * static_cast<long double>(n) /
                   (static_cast<long double>(d) * static_cast<long double>(m))));
    if (params.a < 1) throw domain_error("build_general: derived a < 1 (n too small for d, m)");
    params.b = iroot(n / (d * m), d - 1);
    params.b_i = {0, 1};
    for (int i = 3; i <= d; ++i) params.b_i.push_back(b_power(n / (d * m), i, d));
    for (int64_t bi : params.b_i) params.diffs.push_back(params.a + bi);
    if (l) {
        check_growth_condition(params.a, d, delta, *l, m);
        // Paper's admissibility window: l^(d-1) m^d <= (1-delta)/(2d) * n.
        long double lhs = std::pow(static_cast<long double>(*l), d - 1) *
                          std::pow(static_cast<long double>(m), d);
        long double rhs = (1.0L - delta) / (2.0L * d) * static_cast<long double>(n);
        if (lhs > rhs)
            throw domain_error("build_general: l^(d-1)*m^d = " +
                               std::to_string(static_cast<double>(lhs)) + " exceeds (1-delta)/(2d)*n = " +
                               std::to_string(static_cast<double>(rhs)));
    }
    int64_t max_elem = 0;
    for (int64_t a_i : params.diffs) max_elem += a_i * m;
    if (max_elem > n)
        throw domain_error("build_general: construction leaves [n] (max element " +
                           std::to_string(max_elem) + ")");
    IntSet set(max_elem);
    scan_lattice(params.diffs, m, [&](int64_t v) { set.insert(v); });
    return {std::move(set), std::move(params)};
}

ModConstruction build_mod(int d, int64_t n, int64_t m, int64_t l, double delta) {
    if (d < 2) throw domain_error("build_mod: d must be >= 2");
    if (m < 2) throw domain_error("build_mod: m must be >= 2");
    if (l < 1) throw domain_error("build_mod: l must be >= 1");
    if (!is_prime(n)) throw domain_error("build_mod: n must be prime");
    ConstructionParams params;
    params.kind = "mod";
    params.d = d;
    params.n = n;
    params.m = m;
    params.delta = delta;
    params.l = l;
    params.modulus = n;
    params.a = static_cast<int64_t>(
        std::floor((1.0L - delta / 3.0L) * static_cast<long double>(n) /
                   (static_cast<long double>(l) * d * static_cast<long double>(m))));
    if (params.a < 1)
        throw domain_error("build_mod: derived a = floor((1-delta/3)(n/l)/(d m)) is degenerate (< 1)");
    params.b = iroot(n / (d * l * m), d - 1);
    params.b_i = {0, 1};
    for (int i = 3; i <= d; ++i) params.b_i.push_back(b_power(n / (d * l * m), i, d));
    for (int64_t bi : params.b_i) params.diffs.push_back(params.a + bi);
    check_growth_condition(params.a, d, delta, l, m);
    ResidueSet set(n);
    scan_lattice(params.diffs, m, [&](int64_t v) { set.insert(v); });
    return {std::move(set), std::move(params)};
}

IntSet construction_multiple(const ConstructionParams& p, int64_t l) {
    if (l < 1) throw domain_error("construction_multiple: l must be >= 1");
    int d = p.d;
    std::vector<int64_t> lo(d, l), hi(d, l * p.m);
    int64_t top = 0;
    for (int64_t a_i : p.diffs) top += a_i * l * p.m;
    IntSet out(p.modulus ? *p.modulus - 1 : top);
    std::vector<int64_t> x = lo;
    int64_t val = 0;
    for (int i = 0; i < d; ++i) val += p.diffs[i] * x[i];
    auto& w = out.words();
    int64_t n = p.modulus.value_or(0);
    for (;;) {
        int64_t v = n ? val % n : val;
        w[static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63);
        int i = d - 1;
        while (i >= 0 && x[i] == hi[i]) {
            val -= (x[i] - lo[i]) * p.diffs[i];
            x[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++x[i];
        val += p.diffs[i];
    }
    out.invalidate_caches();
    return out;
}

namespace {

// Differences worth scanning for lA of a lattice construction: the generators
// and their pairwise sums/differences (the edge and diagonal directions).
std::vector<int64_t> candidate_diffs(const ConstructionParams& p) {
    std::vector<int64_t> out = p.diffs;
    for (size_t i = 0; i < p.diffs.size(); ++i) {
        for (size_t j = i + 1; j < p.diffs.size(); ++j) {
            out.push_back(p.diffs[i] + p.diffs[j]);
            out.push_back(std::abs(p.diffs[i] - p.diffs[j]));
        }
    }
    return out;
}

ExtremalReport verify_common(int64_t actual_card, const ConstructionParams& p, int64_t l,
                             const ApRun& run) {
    ExtremalReport r;
    r.expected_card = 1;
    for (int i = 0; i < p.d; ++i) r.expected_card *= p.m;
    r.actual_card = actual_card;
    r.card_ok = r.actual_card == r.expected_card;
    r.l = l;
    r.ap_run = run;
    r.ap_len = run.length;
    r.ap_bound = l * p.m;
    r.edge_len = l * p.m - l + 1;
    r.edge_found = r.ap_len >= r.edge_len;
    r.ap_ok = r.ap_len <= r.ap_bound;
    r.pass = r.card_ok && r.ap_ok;
    return r;
}

}  // namespace

ExtremalReport verify_extremal(const Construction& c, int64_t l) {
    if (l < 1) throw domain_error("verify_extremal: l must be >= 1");
    IntSet la = construction_multiple(c.params, l);
    LongestApOptions opt;
    opt.max_diff = 64;
    opt.extra_diffs = candidate_diffs(c.params);
    ApRun run = longest_ap(la, opt);
    return verify_common(c.set.size(), c.params, l, run);
}

ExtremalReport verify_extremal(const ModConstruction& c, int64_t l) {
    if (l < 1) throw domain_error("verify_extremal: l must be >= 1");
    IntSet la_bits = construction_multiple(c.params, l);
    ResidueSet la(c.params.n, la_bits.elements());
    ApRun run = longest_ap_mod(la);  // full difference scan: n is desk-scale
    return verify_common(c.set.size(), c.params, l, run);
}

}  // namespace sumlab
