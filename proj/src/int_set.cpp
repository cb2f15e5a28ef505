#include "sumlab/int_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "sumlab/detail/bitops.hpp"
#include "sumlab/errors.hpp"

namespace sumlab {

namespace d = detail;

IntSet::IntSet(int64_t universe_bound) : bound_(universe_bound) {
    if (universe_bound < 0) throw domain_error("IntSet: universe_bound must be >= 0");
    w_.assign(d::words_for(bound_ + 1), 0);
}

IntSet IntSet::of(std::initializer_list<int64_t> xs) {
    return from_elements(std::vector<int64_t>(xs));
}

IntSet IntSet::from_elements(const std::vector<int64_t>& xs) {
    int64_t b = 0;
    for (int64_t x : xs) {
        if (x < 0) throw domain_error("IntSet: negative element " + std::to_string(x) +
                                      " (shift inputs to [0,N] first)");
        b = std::max(b, x);
    }
    return from_elements(xs, b);
}

IntSet IntSet::from_elements(const std::vector<int64_t>& xs, int64_t universe_bound) {
    IntSet s(universe_bound);
    for (int64_t x : xs) s.insert(x);
    return s;
}

IntSet IntSet::interval(int64_t lo, int64_t hi) {
    if (lo < 0 || hi < lo) throw domain_error("IntSet::interval: need 0 <= lo <= hi");
    IntSet s(hi);
    d::paint_range(s.w_, lo, hi);
    s.invalidate_caches();
    return s;
}

bool IntSet::contains(int64_t x) const {
    if (x < 0 || x > bound_) return false;
    return (w_[static_cast<size_t>(x >> 6)] >> (x & 63)) & 1;
}

void IntSet::insert(int64_t x) {
    if (x < 0 || x > bound_)
        throw domain_error("IntSet::insert: " + std::to_string(x) + " outside [0, " +
                           std::to_string(bound_) + "]");
    w_[static_cast<size_t>(x >> 6)] |= 1ULL << (x & 63);
    caches_ok_ = false;
}

void IntSet::refresh_caches() const {
    size_cache_ = d::popcount(w_.data(), w_.size());
    runs_cache_ = d::count_runs(w_.data(), w_.size());
    min_cache_ = d::find_first(w_.data(), w_.size());
    max_cache_ = d::find_last(w_.data(), w_.size());
    caches_ok_ = true;
}

int64_t IntSet::size() const {
    if (!caches_ok_) refresh_caches();
    return size_cache_;
}

int64_t IntSet::min() const {
    if (!caches_ok_) refresh_caches();
    return min_cache_;
}

int64_t IntSet::max() const {
    if (!caches_ok_) refresh_caches();
    return max_cache_;
}

int64_t IntSet::run_count() const {
    if (!caches_ok_) refresh_caches();
    return runs_cache_;
}

std::vector<int64_t> IntSet::elements() const {
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(size()));
    for_each([&](int64_t x) { out.push_back(x); });
    return out;
}

std::vector<std::pair<int64_t, int64_t>> IntSet::runs() const {
    // Word-wise boundary scan: a run starts where a set bit follows a clear
    // one, ends where a set bit precedes a clear one.  O(words + runs).
    std::vector<int64_t> starts, ends;
    size_t n_runs = static_cast<size_t>(run_count());
    starts.reserve(n_runs);
    ends.reserve(n_runs);
    uint64_t prev_msb = 0;
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t x = w_[i];
        if (x == 0) {
            prev_msb = 0;
            continue;
        }
        uint64_t next_lsb = i + 1 < w_.size() ? w_[i + 1] << 63 : 0;
        uint64_t sm = x & ~((x << 1) | prev_msb);
        uint64_t em = x & ~((x >> 1) | next_lsb);
        while (sm) {
            starts.push_back(static_cast<int64_t>(i) * 64 + __builtin_ctzll(sm));
            sm &= sm - 1;
        }
        while (em) {
            ends.push_back(static_cast<int64_t>(i) * 64 + __builtin_ctzll(em));
            em &= em - 1;
        }
        prev_msb = x >> 63;
    }
    std::vector<std::pair<int64_t, int64_t>> out;
    out.reserve(starts.size());
    for (size_t k = 0; k < starts.size(); ++k) out.emplace_back(starts[k], ends[k]);
    return out;
}

bool IntSet::operator==(const IntSet& o) const {
    // Set semantics: same members, regardless of declared universe bounds.
    size_t common = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < common; ++i)
        if (w_[i] != o.w_[i]) return false;
    for (size_t i = common; i < w_.size(); ++i)
        if (w_[i]) return false;
    for (size_t i = common; i < o.w_.size(); ++i)
        if (o.w_[i]) return false;
    return true;
}

bool IntSet::is_subset_of(const IntSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
        if (w_[i] & ~other) return false;
    }
    return true;
}

ResidueSet::ResidueSet(int64_t modulus) : n_(modulus), bits_(modulus - 1) {
    if (modulus < 2) throw domain_error("ResidueSet: modulus must be >= 2");
}

ResidueSet::ResidueSet(int64_t modulus, const std::vector<int64_t>& xs) : ResidueSet(modulus) {
    for (int64_t x : xs) insert(x);
}

void ResidueSet::insert(int64_t x) {
    x %= n_;
    if (x < 0) x += n_;
    bits_.insert(x);
}

bool ResidueSet::contains(int64_t x) const {
    x %= n_;
    if (x < 0) x += n_;
    return bits_.contains(x);
}

SeqPrefix::SeqPrefix(std::vector<int64_t> elements) : e_(std::move(elements)) {
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 1) throw domain_error("SeqPrefix: elements must be positive");
        if (i > 0 && e_[i] < e_[i - 1]) throw domain_error("SeqPrefix: elements must be non-decreasing");
    }
}

int64_t SeqPrefix::total() const {
    int64_t t = 0;
    for (int64_t x : e_) t += x;
    return t;
}

int64_t seq_count(const SeqPrefix& a, int64_t n) {
    if (n < 1) throw domain_error("seq_count: n must be >= 1");
    const auto& e = a.elements();
    return std::upper_bound(e.begin(), e.end(), n) - e.begin();
}

namespace {

void add_by_shifts(IntSet& dst, const IntSet& big, const IntSet& small) {
    size_t src_words = d::words_for(big.max() + 1);
    auto& w = dst.words();
    small.for_each([&](int64_t x) { d::or_shift(w, big.words().data(), src_words, x); });
}

// Interval painting over run pairs [sx+sy, ex+ey], generated in start order
// by a heap of per-row cursors instead of materializing and sorting all
// R_X*R_Y pairs.  A pair whose interval is already behind the paint frontier
// advances its row cursor by binary search past every covered pair, so dense
// interval-like operands cost about O(output words).  Gives up (returns
// false) when the pop budget runs out; the caller falls back to shifts.
struct MergeCursor {
    int64_t start;
    uint32_t row;
    uint32_t j;
    bool operator>(const MergeCursor& o) const { return start > o.start; }
};

bool add_by_merge(IntSet& dst, const IntSet& a, const IntSet& b, int64_t pop_budget) {
    auto ra = a.runs();
    auto rb = b.runs();
    if (ra.size() > rb.size()) std::swap(ra, rb);  // fewer rows, fewer heap ops
    std::vector<int64_t> ystart(rb.size()), yend(rb.size());
    for (size_t j = 0; j < rb.size(); ++j) {
        ystart[j] = rb[j].first;
        yend[j] = rb[j].second;
    }
    std::priority_queue<MergeCursor, std::vector<MergeCursor>, std::greater<>> heap;
    for (uint32_t i = 0; i < ra.size(); ++i)
        heap.push({ra[i].first + ystart[0], i, 0});
    auto& w = dst.words();
    int64_t frontier = -1;
    while (!heap.empty()) {
        if (--pop_budget < 0) return false;
        MergeCursor c = heap.top();
        heap.pop();
        int64_t ex = ra[c.row].second;
        int64_t end = ex + yend[c.j];
        if (end > frontier) {
            d::paint_range(w, std::max(c.start, frontier + 1), end);
            frontier = end;
            if (c.j + 1 < rb.size())
                heap.push({ra[c.row].first + ystart[c.j + 1], c.row, c.j + 1});
        } else {
            // Skip every pair of this row that the frontier already covers.
            auto it = std::upper_bound(yend.begin() + c.j, yend.end(), frontier - ex);
            if (it != yend.end()) {
                uint32_t j = static_cast<uint32_t>(it - yend.begin());
                heap.push({ra[c.row].first + ystart[j], c.row, j});
            }
        }
    }
    return true;
}

}  // namespace

IntSet sumset(const IntSet& a, const IntSet& b) {
    IntSet out(a.universe_bound() + b.universe_bound());
    if (a.empty() || b.empty()) return out;
    const IntSet& big = a.size() >= b.size() ? a : b;
    const IntSet& small = a.size() >= b.size() ? b : a;
    int64_t out_words = static_cast<int64_t>(d::words_for(a.max() + b.max() + 1));
    int64_t shift_cost = small.size() * static_cast<int64_t>(d::words_for(big.max() + 1));
    int64_t pairs = a.run_count() * b.run_count();
    bool dense = a.size() >= 8 * a.run_count() && b.size() >= 8 * b.run_count();
    if (dense || pairs <= 4'000'000) {
        if (add_by_merge(out, a, b, 64 * out_words + 4'000'000)) {
            out.invalidate_caches();
            return out;
        }
        std::fill(out.words().begin(), out.words().end(), 0);  // partial paint discarded
    }
    (void)shift_cost;
    add_by_shifts(out, big, small);
    out.invalidate_caches();
    return out;
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus()) throw domain_error("sumset: mismatched moduli");
    int64_t n = a.modulus();
    ResidueSet out(n);
    if (a.empty() || b.empty()) return out;
    const ResidueSet& big = a.size() >= b.size() ? a : b;
    const ResidueSet& small = a.size() >= b.size() ? b : a;
    auto& w = const_cast<IntSet&>(out.bits()).words();
    small.bits().for_each([&](int64_t x) { d::rotate_or(w, big.bits().words(), x, n); });
    out.bits().invalidate_caches();
    return out;
}

namespace {

int64_t parse_line_int(const std::string& tok, size_t lineno) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw domain_error("line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
    }
}

std::vector<int64_t> read_int_lines(std::istream& in) {
    std::vector<int64_t> vals;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) vals.push_back(parse_line_int(tok, lineno));
    }
    return vals;
}

}  // namespace

IntSet read_int_set(std::istream& in) { return IntSet::from_elements(read_int_lines(in)); }

IntSet read_int_set_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open set file: " + path);
    return read_int_set(f);
}

SeqPrefix read_seq_prefix(std::istream& in) { return SeqPrefix(read_int_lines(in)); }

SeqPrefix read_seq_prefix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open sequence file: " + path);
    return read_seq_prefix(f);
}

void write_int_set(std::ostream& out, const IntSet& s) {
    s.for_each([&](int64_t x) { out << x << '\n'; });
}

}  // namespace sumlab
