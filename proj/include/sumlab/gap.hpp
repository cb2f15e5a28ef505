#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/int_set.hpp"

namespace sumlab {

// Generalized arithmetic progression descriptor
//   { base + sum x_i * diffs[i] : 0 <= x_i <= lengths[i] }.
// Two Gaps are equal structurally (field-wise); set-level equality of the
// point sets they describe must go through gap_enumerate.
struct Gap {
    int64_t base = 0;
    std::vector<int64_t> diffs;    // nonzero; negatives allowed
    std::vector<int64_t> lengths;  // n_i >= 0

    int rank() const { return static_cast<int>(diffs.size()); }
    int64_t volume() const;    // product of lengths (0 if any length is 0)
    int64_t box_size() const;  // product of (length_i + 1)
    bool normal() const { return base == 0; }
    bool operator==(const Gap& o) const = default;
};

// The lattice box B_Q = {(x_1..x_d) : 0 <= x_i <= n_i} behind a Gap.
struct GapBox {
    std::vector<int64_t> dims;
    int64_t size() const;  // product of (dims[i] + 1)
};

inline constexpr int64_t kDefaultEnumCap = 100'000'000;  // lattice points

// Literal format "a ; a1,a2,... ; n1,n2,..." used by the CLI and fixtures.
Gap parse_gap(const std::string& literal);
std::string format_gap(const Gap& g);

// The image set of the box map Phi.  All values must be non-negative
// (negative-difference Gaps are handled by shifting the base).
IntSet gap_enumerate(const Gap& g, int64_t enum_cap = kDefaultEnumCap);

// |Phi(B_Q)|; works for value ranges containing negatives.
int64_t gap_cardinality(const Gap& g, int64_t enum_cap = kDefaultEnumCap);

struct ProperResult {
    bool proper = false;
    // On failure: nonzero v with |v_i| <= n_i and sum v_i * a_i = 0, obtained
    // by differencing the first collision of the lexicographic box scan.
    std::optional<std::vector<int64_t>> vanishing;
};

ProperResult gap_is_proper(const Gap& g, int64_t enum_cap = kDefaultEnumCap);

// Same-difference-set addition: base a+b, lengths m_i+n_i.  Mismatched
// difference sets are rejected, never silently re-based.
Gap gap_add(const Gap& g, const Gap& h);

// l*P = (l-1)P + P: base l*a, lengths l*n_i.
Gap gap_scale(const Gap& g, int64_t l);

// (1/s)P for normal P with all lengths divisible by s.
Gap gap_divide(const Gap& g, int64_t s);

// Certificate check: every point of Phi(B_Q) is a member of S.
bool verify_gap_in_set(const Gap& g, const IntSet& s, int64_t enum_cap = kDefaultEnumCap);

// Same point set, translated so the minimum value is 0 and all differences
// are positive (a negative difference a_i flips to -a_i with the base shifted
// by a_i * n_i).
Gap gap_translate_nonneg(const Gap& g);

}  // namespace sumlab
