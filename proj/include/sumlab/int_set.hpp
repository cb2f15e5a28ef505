#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sumlab {

// Finite set of non-negative integers over the inclusive universe
// [0, universe_bound], packed 64 members per word.  This is the currency of
// every sum engine below: membership is one bit, set algebra is word-at-a-time
// and a shifted-OR is the single-addition primitive.
//
// Values are treated as immutable once built; all free operations below are
// pure and safe to run concurrently on shared inputs.
class IntSet {
public:
    IntSet() : IntSet(0) {}
    explicit IntSet(int64_t universe_bound);

    static IntSet of(std::initializer_list<int64_t> xs);
    static IntSet from_elements(const std::vector<int64_t>& xs);
    static IntSet from_elements(const std::vector<int64_t>& xs, int64_t universe_bound);
    static IntSet interval(int64_t lo, int64_t hi);  // {lo..hi}, bound hi

    int64_t universe_bound() const { return bound_; }
    bool contains(int64_t x) const;
    void insert(int64_t x);  // 0 <= x <= universe_bound

    int64_t size() const;       // cardinality
    bool empty() const { return size() == 0; }
    int64_t min() const;        // -1 when empty
    int64_t max() const;        // -1 when empty
    int64_t run_count() const;  // number of maximal runs of consecutive members

    std::vector<int64_t> elements() const;
    // Maximal runs [a,b] of consecutive members, ascending.
    std::vector<std::pair<int64_t, int64_t>> runs() const;

    template <typename F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < w_.size(); ++w) {
            uint64_t word = w_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f(static_cast<int64_t>(w) * 64 + b);
                word &= word - 1;
            }
        }
    }

    bool operator==(const IntSet& o) const;  // set semantics (members only)
    bool operator!=(const IntSet& o) const { return !(*this == o); }
    bool is_subset_of(const IntSet& o) const;

    // Engine access.  Mutating through words() invalidates no caches; engines
    // that build sets in place must call invalidate_caches() once afterwards.
    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }
    void invalidate_caches() const { caches_ok_ = false; }

private:
    void refresh_caches() const;

    int64_t bound_ = 0;
    std::vector<uint64_t> w_;
    mutable int64_t size_cache_ = 0;
    mutable int64_t runs_cache_ = 0;
    mutable int64_t min_cache_ = -1;
    mutable int64_t max_cache_ = -1;
    mutable bool caches_ok_ = true;
};

// Set of residues modulo n (n >= 2), members reduced to [0, n-1].
class ResidueSet {
public:
    explicit ResidueSet(int64_t modulus);
    ResidueSet(int64_t modulus, const std::vector<int64_t>& xs);

    int64_t modulus() const { return n_; }
    const IntSet& bits() const { return bits_; }
    void insert(int64_t x);  // reduced mod n
    bool contains(int64_t x) const;
    int64_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::vector<int64_t> elements() const { return bits_.elements(); }
    bool operator==(const ResidueSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int64_t n_;
    IntSet bits_;
};

// Finite non-decreasing multiset of positive integers: the prefix of an
// infinite sequence, repetitions allowed.
class SeqPrefix {
public:
    SeqPrefix() = default;
    explicit SeqPrefix(std::vector<int64_t> elements);  // validates order/positivity

    const std::vector<int64_t>& elements() const { return e_; }
    size_t declared_length() const { return e_.size(); }
    int64_t total() const;

private:
    std::vector<int64_t> e_;
};

// A + B = {a+b}; universe_bound is the exact sum of bounds so downstream AP
// searches never scan dead space.  Empty if either input is empty.
IntSet sumset(const IntSet& a, const IntSet& b);

// A + B over Z_n (moduli must match).
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);

// Number of elements of A in [1, n], counted with multiplicity.
int64_t seq_count(const SeqPrefix& a, int64_t n);

// Text format: one integer per line, '#' starts a comment.
IntSet read_int_set(std::istream& in);
IntSet read_int_set_file(const std::string& path);
SeqPrefix read_seq_prefix(std::istream& in);
SeqPrefix read_seq_prefix_file(const std::string& path);
void write_int_set(std::ostream& out, const IntSet& s);

}  // namespace sumlab
