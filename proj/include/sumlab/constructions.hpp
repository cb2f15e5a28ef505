#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/int_set.hpp"
#include "sumlab/structure.hpp"

namespace sumlab {

// Every builder output is self-describing: the derived constants travel with
// the set so the verifier can recompute the claimed bounds.
struct ConstructionParams {
    std::string kind;  // "planar" | "general" | "mod"
    int d = 2;
    int64_t n = 0;
    int64_t m = 0;  // side length: |A| = m^d
    double delta = 0.1;
    std::optional<int64_t> l;        // intended multiplier, when given
    std::optional<int64_t> modulus;  // present for the mod construction
    int64_t a = 0, b = 0;            // base constants (planar: a = p1, b = p2)
    std::vector<int64_t> b_i;
    std::vector<int64_t> diffs;  // the a_i (planar: {p1, p2})
};

struct Construction {
    IntSet set;
    ConstructionParams params;
};

struct ModConstruction {
    ResidueSet set;
    ConstructionParams params;
};

// A = {p1 x1 + p2 x2 : 1 <= x1, x2 <= m} for the largest primes
// p1 < p2 <= floor(n/2m) with p2 > m; |A| = m^2 and A is inside [n].
Construction build_planar(int64_t n, int64_t m, std::optional<int64_t> l = std::nullopt);

// The general rank-d construction: a = floor((1-delta/3) n / (d m)),
// b = floor((n/(d m))^(1/(d-1))), b_1 = 0, b_2 = 1,
// b_i = floor(b^((i-2)/(d-1))) for i >= 3, a_i = a + b_i, and
// A = {sum a_i x_i : 1 <= x_i <= m}.  When l is given the growth condition
// (1 - delta/3) a^(1/(d-1)) >= 2 l m is checked and a violation refused with
// both sides printed.
Construction build_general(int d, int64_t n, int64_t m, double delta = 0.1,
                           std::optional<int64_t> l = std::nullopt);

// The modular variant (n prime): a = floor((1-delta/3)(n/l) / (d m)),
// b = floor((n/(d l m))^(1/(d-1))), same shape otherwise.
ModConstruction build_mod(int d, int64_t n, int64_t m, int64_t l, double delta = 0.1);

struct ExtremalReport {
    int64_t expected_card = 0;
    int64_t actual_card = 0;
    bool card_ok = false;
    int64_t l = 0;
    int64_t ap_len = 0;    // measured over scanned differences (see ap_run)
    int64_t ap_bound = 0;  // l * m
    int64_t edge_len = 0;  // l*m - l + 1: the edge AP that must be present
    bool edge_found = false;
    bool ap_ok = false;
    ApRun ap_run;
    bool pass = false;
};

// lA for a lattice construction, by the identity l(B1+...+Bd) = lB1+...+lBd:
// the image of {sum a_i X_i : l <= X_i <= l*m}, enumerated directly.  Equals
// iterated_sumset(A, l) but costs O(|box|) regardless of sparsity.  Modular
// params reduce values mod n.
IntSet construction_multiple(const ConstructionParams& p, int64_t l);

// Claims 3.1/3.2 on a concrete instance: cardinality m^d, and the longest AP
// of lA measured over small differences plus the construction's own
// difference combinations, checked against l*m.
ExtremalReport verify_extremal(const Construction& c, int64_t l);
ExtremalReport verify_extremal(const ModConstruction& c, int64_t l);

bool is_prime(int64_t p);

}  // namespace sumlab
