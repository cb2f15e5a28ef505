#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/gap.hpp"
#include "sumlab/sumsets.hpp"

using namespace sumlab;

namespace {

// Independent rank-2 properness oracle: improper iff the minimal vanishing
// direction (a2/g, -a1/g) fits the box.
bool proper2_oracle(int64_t a1, int64_t a2, int64_t n1, int64_t n2) {
    if (n1 == 0 || n2 == 0) return true;
    int64_t g = std::gcd(std::abs(a1), std::abs(a2));
    return !(std::abs(a2) / g <= n1 && std::abs(a1) / g <= n2);
}

Gap random_gap2(std::mt19937_64& rng, int64_t max_diff, int64_t max_len) {
    Gap g;
    g.base = static_cast<int64_t>(rng() % 20);
    g.diffs = {static_cast<int64_t>(1 + rng() % max_diff),
               static_cast<int64_t>(1 + rng() % max_diff)};
    g.lengths = {static_cast<int64_t>(1 + rng() % max_len),
                 static_cast<int64_t>(1 + rng() % max_len)};
    return g;
}

}  // namespace

TEST_CASE("gap_enumerate basics") {
    CHECK(gap_enumerate(Gap{0, {1, 2}, {1, 1}}) == IntSet::of({0, 1, 2, 3}));
    CHECK(gap_enumerate(Gap{5, {3}, {4}}) == IntSet::of({5, 8, 11, 14, 17}));
    CHECK(gap_enumerate(Gap{0, {7}, {0}}) == IntSet::of({0}));
}

TEST_CASE("gap_enumerate equals the double-loop oracle on random rank-2 gaps") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Gap g = random_gap2(rng, 15, 20);
        std::set<int64_t> want;
        for (int64_t x1 = 0; x1 <= g.lengths[0]; ++x1)
            for (int64_t x2 = 0; x2 <= g.lengths[1]; ++x2)
                want.insert(g.base + x1 * g.diffs[0] + x2 * g.diffs[1]);
        CHECK(oracle::to_set(gap_enumerate(g)) == want);
        CHECK(gap_cardinality(g) == static_cast<int64_t>(want.size()));
    }
}

TEST_CASE("enumeration cap is a refusal, never partial output") {
    Gap big{0, {1, 1000}, {100000, 100000}};
    CHECK_THROWS_AS(gap_enumerate(big, 1000), cap_exceeded);
    CHECK_THROWS_AS(gap_is_proper(big, 1000), cap_exceeded);
}

TEST_CASE("negative image values are refused with a shift hint") {
    CHECK_THROWS_AS(gap_enumerate(Gap{0, {-3}, {4}}), domain_error);
    // but cardinality and properness are translation-invariant and work
    CHECK(gap_cardinality(Gap{0, {-3}, {4}}) == 5);
    CHECK(gap_is_proper(Gap{0, {-3}, {4}}).proper);
}

TEST_CASE("properness examples") {
    CHECK(gap_is_proper(Gap{0, {1, 2}, {1, 1}}).proper);
    auto r = gap_is_proper(Gap{0, {1, 2}, {2, 1}});
    CHECK(!r.proper);
    REQUIRE(r.vanishing.has_value());
    CHECK(*r.vanishing == std::vector<int64_t>{2, -1});  // 2*1 - 1*2 = 0
}

TEST_CASE("planar-style construction is proper") {
    // small primes, p2 > m
    int64_t p1 = 101, p2 = 103, m = 5;
    Gap g{p1 + p2, {p1, p2}, {m - 1, m - 1}};
    auto r = gap_is_proper(g);
    CHECK(r.proper);
    CHECK(gap_cardinality(g) == m * m);
}

TEST_CASE("vanishing vector is always a valid witness") {
    std::mt19937_64 rng(12);
    int seen_improper = 0;
    for (int t = 0; t < 400; ++t) {
        Gap g = random_gap2(rng, 8, 8);
        auto r = gap_is_proper(g);
        CHECK(r.proper == proper2_oracle(g.diffs[0], g.diffs[1], g.lengths[0], g.lengths[1]));
        if (!r.proper) {
            ++seen_improper;
            REQUIRE(r.vanishing.has_value());
            const auto& v = *r.vanishing;
            REQUIRE(v.size() == 2);
            CHECK(v[0] * g.diffs[0] + v[1] * g.diffs[1] == 0);
            CHECK((v[0] != 0 || v[1] != 0));
            CHECK(std::abs(v[0]) <= g.lengths[0]);
            CHECK(std::abs(v[1]) <= g.lengths[1]);
        }
    }
    CHECK(seen_improper > 20);  // the sample must actually exercise the branch
}

TEST_CASE("proper iff box-size cardinality, rank 3 sample") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        Gap g;
        g.base = 0;
        g.diffs = {static_cast<int64_t>(1 + rng() % 9), static_cast<int64_t>(1 + rng() % 9),
                   static_cast<int64_t>(1 + rng() % 9)};
        g.lengths = {static_cast<int64_t>(rng() % 5), static_cast<int64_t>(rng() % 5),
                     static_cast<int64_t>(rng() % 5)};
        auto r = gap_is_proper(g);
        CHECK(r.proper == (gap_cardinality(g) == g.box_size()));
    }
}

TEST_CASE("cardinality bound |Q| <= 2^d Vol(Q) when all lengths >= 1") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 300; ++t) {
        int rank = 1 + static_cast<int>(rng() % 3);
        Gap g;
        g.base = 0;
        for (int i = 0; i < rank; ++i) {
            g.diffs.push_back(static_cast<int64_t>(1 + rng() % 12));
            g.lengths.push_back(static_cast<int64_t>(1 + rng() % 8));
        }
        CHECK(gap_cardinality(g) <= (int64_t{1} << rank) * g.volume());
    }
}

TEST_CASE("gap_add follows the same-difference-set rule") {
    Gap g{0, {3}, {2}}, h{1, {3}, {4}};
    CHECK(gap_add(g, h) == Gap{1, {3}, {6}});
    Gap zero{0, {3}, {0}};
    CHECK(gap_add(g, zero) == g);
    CHECK_THROWS_AS(gap_add(g, Gap{0, {4}, {2}}), domain_error);

    // enumerate(G+H) == enumerate(G) + enumerate(H) for same-diff gaps
    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; ++t) {
        std::vector<int64_t> diffs{static_cast<int64_t>(1 + rng() % 10),
                                   static_cast<int64_t>(1 + rng() % 10)};
        Gap a{static_cast<int64_t>(rng() % 5), diffs,
              {static_cast<int64_t>(rng() % 11), static_cast<int64_t>(rng() % 11)}};
        Gap b{static_cast<int64_t>(rng() % 5), diffs,
              {static_cast<int64_t>(rng() % 11), static_cast<int64_t>(rng() % 11)}};
        CHECK(gap_enumerate(gap_add(a, b)) == sumset(gap_enumerate(a), gap_enumerate(b)));
    }
}

TEST_CASE("gap_scale matches the iterated engine") {
    CHECK(gap_scale(Gap{0, {5}, {3}}, 2) == Gap{0, {5}, {6}});
    Gap g{2, {3, 7}, {4, 2}};
    CHECK(gap_scale(g, 1) == g);
    std::mt19937_64 rng(16);
    for (int t = 0; t < 60; ++t) {
        Gap a{static_cast<int64_t>(rng() % 4),
              {static_cast<int64_t>(1 + rng() % 8), static_cast<int64_t>(1 + rng() % 8)},
              {static_cast<int64_t>(rng() % 7), static_cast<int64_t>(rng() % 7)}};
        int64_t l = 1 + static_cast<int64_t>(rng() % 4);
        CHECK(gap_enumerate(gap_scale(a, l)) == iterated_sumset(gap_enumerate(a), l));
    }
}

TEST_CASE("gap_divide requires a normal gap and divisible lengths") {
    CHECK(gap_divide(Gap{0, {7}, {10}}, 2) == Gap{0, {7}, {5}});
    CHECK_THROWS_AS(gap_divide(Gap{3, {7}, {10}}, 2), domain_error);
    CHECK_THROWS_AS(gap_divide(Gap{0, {7}, {9}}, 2), domain_error);
    // scale/divide round trip on divisible lengths
    Gap g{0, {4, 9}, {6, 10}};
    CHECK(gap_scale(gap_divide(g, 2), 2).lengths == g.lengths);
}

TEST_CASE("verify_gap_in_set") {
    CHECK(verify_gap_in_set(Gap{0, {1}, {9}}, IntSet::interval(0, 9)));
    CHECK(!verify_gap_in_set(Gap{0, {1}, {10}}, IntSet::interval(0, 9)));
}

TEST_CASE("gap literal round trip") {
    Gap g = parse_gap("5 ; 3,-7 ; 4,2");
    CHECK(g == Gap{5, {3, -7}, {4, 2}});
    CHECK(parse_gap(format_gap(g)) == g);
    CHECK_THROWS_AS(parse_gap("1 ; 2"), domain_error);
    CHECK_THROWS_AS(parse_gap("1 ; 0 ; 2"), domain_error);  // zero difference
}

TEST_CASE("translate_nonneg preserves the point set up to translation") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        Gap g{0,
              {static_cast<int64_t>(rng() % 19) - 9, static_cast<int64_t>(1 + rng() % 9)},
              {static_cast<int64_t>(rng() % 6), static_cast<int64_t>(rng() % 6)}};
        if (g.diffs[0] == 0) g.diffs[0] = -3;
        Gap n = gap_translate_nonneg(g);
        CHECK(gap_cardinality(n) == gap_cardinality(g));
        CHECK(n.base == 0);
        for (int64_t d : n.diffs) CHECK(d > 0);
    }
}

// Non-proper collapse: |gQ|/Vol(gQ) non-increasing in g and < 0.5 within
// g <= 64 for every non-proper rank-2 gap with small lengths.  The full range
// is swept in the acceptance suite; this keeps a fast slice.
TEST_CASE("collapse ratio probe, small slice") {
    for (int64_t a1 = 1; a1 <= 6; ++a1) {
        for (int64_t a2 = 1; a2 <= 6; ++a2) {
            for (int64_t n1 = 1; n1 <= 4; ++n1) {
                for (int64_t n2 = 1; n2 <= 4; ++n2) {
                    if (proper2_oracle(a1, a2, n1, n2)) continue;
                    Gap q{0, {a1, a2}, {n1, n2}};
                    REQUIRE(!gap_is_proper(q).proper);
                    IntSet one = gap_enumerate(q);
                    IntSet cur = one;
                    double prev = 1e18;
                    bool collapsed = false;
                    for (int64_t g = 1; g <= 64; ++g) {
                        if (g > 1) cur = sumset(cur, one);
                        double ratio = static_cast<double>(cur.size()) /
                                       static_cast<double>(g * n1 * g * n2);
                        CHECK(ratio <= prev + 1e-12);
                        prev = ratio;
                        if (ratio < 0.5) {
                            collapsed = true;
                            break;
                        }
                    }
                    CHECK(collapsed);
                }
            }
        }
    }
}
