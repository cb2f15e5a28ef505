#include "sumlab/gap.hpp"

#include <algorithm>
#include <sstream>

#include "sumlab/detail/bitops.hpp"
#include "sumlab/errors.hpp"

namespace sumlab {

namespace d = detail;

int64_t Gap::volume() const {
    int64_t v = 1;
    for (int64_t n : lengths) v *= n;
    return lengths.empty() ? 0 : v;
}

int64_t Gap::box_size() const {
    int64_t v = 1;
    for (int64_t n : lengths) v *= n + 1;
    return v;
}

int64_t GapBox::size() const {
    int64_t v = 1;
    for (int64_t n : dims) v *= n + 1;
    return v;
}

namespace {

void validate(const Gap& g) {
    if (g.diffs.empty()) throw domain_error("Gap: rank must be >= 1");
    if (g.diffs.size() != g.lengths.size()) throw domain_error("Gap: |diffs| != |lengths|");
    for (int64_t a : g.diffs)
        if (a == 0) throw domain_error("Gap: differences must be nonzero");
    for (int64_t n : g.lengths)
        if (n < 0) throw domain_error("Gap: lengths must be >= 0");
}

void check_cap(const Gap& g, int64_t cap) {
    // box_size with overflow guard
    __int128 v = 1;
    for (int64_t n : g.lengths) {
        v *= n + 1;
        if (v > cap)
            throw cap_exceeded("gap enumeration cap exceeded: box has more than " +
                               std::to_string(cap) + " lattice points");
    }
}

// Lexicographic odometer over the box, first coordinate slowest.  Calls
// f(value) for every lattice point.
template <typename F>
void scan_box(const Gap& g, F&& f) {
    int r = g.rank();
    std::vector<int64_t> x(r, 0);
    int64_t val = g.base;
    for (;;) {
        f(val);
        int i = r - 1;
        while (i >= 0 && x[i] == g.lengths[i]) {
            val -= x[i] * g.diffs[i];
            x[i] = 0;
            --i;
        }
        if (i < 0) return;
        ++x[i];
        val += g.diffs[i];
    }
}

struct ValueRange {
    int64_t lo, hi;
};

ValueRange value_range(const Gap& g) {
    int64_t lo = g.base, hi = g.base;
    for (int i = 0; i < g.rank(); ++i) {
        int64_t extent = g.diffs[i] * g.lengths[i];
        if (extent < 0)
            lo += extent;
        else
            hi += extent;
    }
    return {lo, hi};
}

constexpr int64_t kSpanCapBits = int64_t{1} << 31;

}  // namespace

Gap parse_gap(const std::string& literal) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : literal) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw domain_error("Gap literal must be 'a ; a1,a2,... ; n1,n2,...'");
    auto ints = [](const std::string& s) {
        std::vector<int64_t> out;
        std::string tok;
        std::istringstream ss(s);
        while (std::getline(ss, tok, ',')) {
            try {
                out.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw domain_error("Gap literal: bad integer '" + tok + "'");
            }
        }
        return out;
    };
    auto base = ints(parts[0]);
    if (base.size() != 1) throw domain_error("Gap literal: base must be a single integer");
    Gap g{base[0], ints(parts[1]), ints(parts[2])};
    validate(g);
    return g;
}

std::string format_gap(const Gap& g) {
    std::ostringstream out;
    out << g.base << " ; ";
    for (size_t i = 0; i < g.diffs.size(); ++i) out << (i ? "," : "") << g.diffs[i];
    out << " ; ";
    for (size_t i = 0; i < g.lengths.size(); ++i) out << (i ? "," : "") << g.lengths[i];
    return out.str();
}

IntSet gap_enumerate(const Gap& g, int64_t enum_cap) {
    validate(g);
    check_cap(g, enum_cap);
    auto [lo, hi] = value_range(g);
    if (lo < 0)
        throw domain_error("gap_enumerate: image contains negative values (min " +
                           std::to_string(lo) + "); shift the base first");
    IntSet out(hi);
    auto& w = out.words();
    scan_box(g, [&](int64_t v) { w[static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63); });
    out.invalidate_caches();
    return out;
}

int64_t gap_cardinality(const Gap& g, int64_t enum_cap) {
    validate(g);
    check_cap(g, enum_cap);
    auto [lo, hi] = value_range(g);
    int64_t span = hi - lo + 1;
    if (span > kSpanCapBits)
        throw cap_exceeded("gap_cardinality: value span too large for the bitmap (" +
                           std::to_string(span) + " bits)");
    std::vector<uint64_t> seen(d::words_for(span), 0);
    int64_t count = 0;
    scan_box(g, [&](int64_t v) {
        int64_t p = v - lo;
        uint64_t& word = seen[static_cast<size_t>(p >> 6)];
        uint64_t bit = 1ULL << (p & 63);
        count += !(word & bit);
        word |= bit;
    });
    return count;
}

ProperResult gap_is_proper(const Gap& g, int64_t enum_cap) {
    validate(g);
    check_cap(g, enum_cap);
    auto [lo, hi] = value_range(g);
    int64_t span = hi - lo + 1;
    if (span > kSpanCapBits)
        throw cap_exceeded("gap_is_proper: value span too large for the bitmap");
    std::vector<uint64_t> seen(d::words_for(span), 0);

    int r = g.rank();
    std::vector<int64_t> x(r, 0), collide;
    int64_t collide_val = 0;
    bool found = false;
    int64_t val = g.base;
    for (;;) {
        int64_t p = val - lo;
        uint64_t& word = seen[static_cast<size_t>(p >> 6)];
        uint64_t bit = 1ULL << (p & 63);
        if (word & bit) {
            collide = x;
            collide_val = val;
            found = true;
            break;
        }
        word |= bit;
        int i = r - 1;
        while (i >= 0 && x[i] == g.lengths[i]) {
            val -= x[i] * g.diffs[i];
            x[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++x[i];
        val += g.diffs[i];
    }
    if (!found) return {true, std::nullopt};

    // Re-scan for the earlier preimage with the same value; v = later - earlier.
    std::vector<int64_t> v;
    std::vector<int64_t> y(r, 0);
    int64_t val2 = g.base;
    for (;;) {
        if (val2 == collide_val && y != collide) {
            v.resize(r);
            for (int i = 0; i < r; ++i) v[i] = collide[i] - y[i];
            break;
        }
        int i = r - 1;
        while (i >= 0 && y[i] == g.lengths[i]) {
            val2 -= y[i] * g.diffs[i];
            y[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++y[i];
        val2 += g.diffs[i];
    }
    return {false, v};
}

Gap gap_add(const Gap& g, const Gap& h) {
    validate(g);
    validate(h);
    if (g.diffs != h.diffs)
        throw domain_error("gap_add: difference sets differ (" + format_gap(g) + " vs " +
                           format_gap(h) + ")");
    Gap out{g.base + h.base, g.diffs, {}};
    out.lengths.resize(g.lengths.size());
    for (size_t i = 0; i < g.lengths.size(); ++i) out.lengths[i] = g.lengths[i] + h.lengths[i];
    return out;
}

Gap gap_scale(const Gap& g, int64_t l) {
    validate(g);
    if (l < 1) throw domain_error("gap_scale: l must be >= 1");
    Gap out{g.base * l, g.diffs, {}};
    out.lengths.resize(g.lengths.size());
    for (size_t i = 0; i < g.lengths.size(); ++i) out.lengths[i] = g.lengths[i] * l;
    return out;
}

Gap gap_divide(const Gap& g, int64_t s) {
    validate(g);
    if (s < 1) throw domain_error("gap_divide: s must be >= 1");
    if (!g.normal()) throw domain_error("gap_divide: Gap is not normal (base != 0)");
    Gap out{0, g.diffs, {}};
    out.lengths.resize(g.lengths.size());
    for (size_t i = 0; i < g.lengths.size(); ++i) {
        if (g.lengths[i] % s != 0)
            throw domain_error("gap_divide: length " + std::to_string(g.lengths[i]) +
                               " not divisible by " + std::to_string(s));
        out.lengths[i] = g.lengths[i] / s;
    }
    return out;
}

bool verify_gap_in_set(const Gap& g, const IntSet& s, int64_t enum_cap) {
    validate(g);
    check_cap(g, enum_cap);
    bool ok = true;
    scan_box(g, [&](int64_t v) { ok = ok && v >= 0 && s.contains(v); });
    return ok;
}

Gap gap_translate_nonneg(const Gap& g) {
    validate(g);
    Gap out = g;
    for (size_t i = 0; i < out.diffs.size(); ++i) {
        if (out.diffs[i] < 0) {
            out.base += out.diffs[i] * out.lengths[i];
            out.diffs[i] = -out.diffs[i];
        }
    }
    out.base = 0;
    return out;
}

}  // namespace sumlab
