#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/lemma_lab.hpp"
#include "sumlab/sumsets.hpp"

using namespace sumlab;

TEST_CASE("pair_representation_counts basics") {
    RepCounts r = pair_representation_counts(IntSet::of({1, 2, 3}));
    CHECK(r.at(3) == 1);
    CHECK(r.at(4) == 1);
    CHECK(r.at(5) == 1);
    CHECK(r.at(2) == 0);

    RepCounts big = pair_representation_counts(IntSet::interval(1, 100));
    CHECK(big.total() == 4950);  // C(100, 2)
}

TEST_CASE("pair_representation_counts matches the double loop") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        auto e = oracle::random_subset(rng, 2 + rng() % 39, 0, 200);
        RepCounts got = pair_representation_counts(IntSet::from_elements(e));
        auto want = oracle::rep_counts(e);
        int64_t total = 0;
        for (auto [x, c] : want) {
            CHECK(got.at(x) == c);
            total += c;
        }
        CHECK(got.total() == total);
        int64_t k = static_cast<int64_t>(e.size());
        CHECK(got.total() == k * (k - 1) / 2);
    }
}

TEST_CASE("buckets partition the support; identity stays exact") {
    std::mt19937_64 rng(42);
    for (auto scheme : {BucketScheme::dyadic, BucketScheme::harmonic}) {
        for (int t = 0; t < 40; ++t) {
            auto e = oracle::random_subset(rng, 16 + rng() % 60, 0, 300);
            IntSet a = IntSet::from_elements(e);
            BucketReport rep = multiplicity_buckets(a, scheme);
            RepCounts rc = pair_representation_counts(a);
            int64_t covered = 0;
            for (const auto& b : rep.buckets) covered += b.size;
            int64_t support = 0;
            for (int64_t v : rc.r) support += v > 0;
            CHECK(covered == support);
            // sandwich: sum m_lo |S_i| <= sum r <= sum m_hi |S_i|
            double lo = 0, hi = 0;
            for (const auto& b : rep.buckets) {
                lo += b.m_lo * static_cast<double>(b.size);
                hi += b.m_hi * static_cast<double>(b.size);
            }
            CHECK(lo <= static_cast<double>(rc.total()) + 1e-9);
            CHECK(hi >= static_cast<double>(rc.total()) - 1e-9);
        }
    }
}

TEST_CASE("harmonic chosen bucket guarantees the multiplicity floor") {
    std::mt19937_64 rng(43);
    int chosen_seen = 0;
    for (int t = 0; t < 60; ++t) {
        auto e = oracle::random_subset(rng, 40 + rng() % 200, 0, 600);
        IntSet a = IntSet::from_elements(e);
        BucketReport rep = multiplicity_buckets(a, BucketScheme::harmonic);
        if (!rep.chosen) continue;
        ++chosen_seen;
        RepCounts rc = pair_representation_counts(a);
        rep.chosen->set.for_each([&](int64_t x) {
            CHECK(static_cast<double>(rc.at(x)) >= rep.chosen->l1 - 1e-9);
        });
        CHECK(rep.chosen->t == (int64_t{1} << (rep.chosen->index + 1)));
    }
    CHECK(chosen_seen > 0);
}

TEST_CASE("interval rep counts form a tent; bucket populations match") {
    // A = [1..n]: r(x) counts pairs a<b, a+b=x: a tent map over [3, 2n-1]
    int64_t n = 64;
    IntSet a = IntSet::interval(1, n);
    RepCounts rc = pair_representation_counts(a);
    for (int64_t x = 3; x <= 2 * n - 1; ++x) {
        int64_t lo = std::max<int64_t>(1, x - n), hi = x / 2;
        int64_t tent = hi - lo + (x % 2 == 0 ? 0 : 1);
        tent = std::max<int64_t>(tent, 0);
        CHECK(rc.at(x) == tent);
    }
    BucketReport rep = multiplicity_buckets(a, BucketScheme::dyadic);
    for (const auto& b : rep.buckets) {
        int64_t manual = 0;
        for (int64_t x = 0; x < static_cast<int64_t>(rc.r.size()); ++x) {
            double v = static_cast<double>(rc.at(x));
            if (v >= 1 && v >= b.m_lo && v < b.m_hi) ++manual;
        }
        CHECK(manual == b.size);
    }
}

TEST_CASE("buckets need |A| >= 16") {
    CHECK_THROWS_AS(multiplicity_buckets(IntSet::interval(1, 15), BucketScheme::dyadic),
                    domain_error);
}

TEST_CASE("greedy_big_sum_subset postconditions at |A| = 1024") {
    std::mt19937_64 rng(44);
    auto e = oracle::random_subset(rng, 1024, 1, 20000);
    IntSet a = IntSet::from_elements(e);
    auto r = greedy_big_sum_subset(a);
    CHECK(static_cast<double>(r.chosen.size()) <= 20.0 * std::log2(1024.0));
    CHECK(r.final_size >= 1024);
    CHECK(static_cast<int64_t>(r.chosen.size()) == 2 * r.T);
    // the greedy's internal sumset equals an independent engine run
    IntSet b = IntSet::from_elements(r.chosen);
    CHECK(distinct_sumset(b, r.T).size() == r.final_size);
}

TEST_CASE("greedy_big_sum_subset on the interval") {
    IntSet a = IntSet::interval(1, 1000);
    auto r = greedy_big_sum_subset(a);
    CHECK(static_cast<double>(r.chosen.size()) <= 20.0 * std::log2(1000.0));
    CHECK(r.final_size >= 1000);
    IntSet b = IntSet::from_elements(r.chosen);
    CHECK(distinct_sumset(b, r.T).size() == r.final_size);
}

TEST_CASE("disjoint_pair_cover basics") {
    auto r = disjoint_pair_cover(IntSet::of({1, 2, 3, 4}), IntSet::of({5}), 2);
    CHECK(r.pairs.size() == 2);
    CHECK(!r.shortfall);
    for (size_t i = 0; i < r.pairs.size(); ++i)
        CHECK(r.pairs[i].first + r.pairs[i].second == r.pair_targets[i]);

    // star obstruction: all representations share element 1
    auto st = disjoint_pair_cover(IntSet::of({1, 4, 6}), IntSet::of({5, 7}), 2);
    CHECK(st.shortfall);
    CHECK(st.pairs.size() == 1);

    CHECK_THROWS_AS(disjoint_pair_cover(IntSet::of({1, 2}), IntSet::of({100}), 1), domain_error);
}

TEST_CASE("disjoint_pair_cover output is disjoint and sum-correct") {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 200; ++t) {
        auto e = oracle::random_subset(rng, 4 + rng() % 11, 1, 40);
        IntSet a = IntSet::from_elements(e);
        RepCounts rc = pair_representation_counts(a);
        std::vector<int64_t> targets;
        for (int64_t x = 0; x < static_cast<int64_t>(rc.r.size()); ++x)
            if (rc.at(x) > 0 && rng() % 3 == 0) targets.push_back(x);
        if (targets.empty()) continue;
        auto r = disjoint_pair_cover(a, IntSet::from_elements(targets), 1 + rng() % 6);
        std::set<int64_t> used;
        std::set<int64_t> tset(targets.begin(), targets.end());
        for (size_t i = 0; i < r.pairs.size(); ++i) {
            auto [x, y] = r.pairs[i];
            CHECK(x != y);
            CHECK(a.contains(x));
            CHECK(a.contains(y));
            CHECK(!used.count(x));
            CHECK(!used.count(y));
            used.insert(x);
            used.insert(y);
            CHECK(tset.count(x + y) == 1);
            CHECK(x + y == r.pair_targets[i]);
        }
    }
}

TEST_CASE("greedy pair cover reaches at least half the optimum") {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 120; ++t) {
        auto e = oracle::random_subset(rng, 4 + rng() % 11, 1, 30);  // |A| <= 14
        IntSet a = IntSet::from_elements(e);
        RepCounts rc = pair_representation_counts(a);
        std::vector<int64_t> targets;
        for (int64_t x = 0; x < static_cast<int64_t>(rc.r.size()); ++x)
            if (rc.at(x) > 0 && rng() % 2 == 0) targets.push_back(x);
        if (targets.empty()) continue;
        std::set<int64_t> tset(targets.begin(), targets.end());
        int64_t opt = oracle::max_disjoint_pairs(e, tset);
        auto r = disjoint_pair_cover(a, IntSet::from_elements(targets), 1000);
        CHECK(2 * static_cast<int64_t>(r.pairs.size()) >= opt);
    }
}
