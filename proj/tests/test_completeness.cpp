#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sumlab/completeness.hpp"
#include "sumlab/errors.hpp"

using namespace sumlab;

TEST_CASE("erdos_obstruction shapes") {
    // a_i = 2^i: g_i = 2 for i >= 2, bounded
    std::vector<int64_t> powers;
    for (int i = 1; i <= 20; ++i) powers.push_back(int64_t{1} << i);
    auto r2 = erdos_obstruction(SeqPrefix(powers), 3);
    CHECK(r2.max_gap == 2);
    CHECK(!r2.increasing_tail);
    CHECK(!r2.obstruction);

    // a_i = 3^i: gaps grow, obstruction
    std::vector<int64_t> trip;
    int64_t v = 3;
    for (int i = 1; i <= 30; ++i, v *= 3) {
        trip.push_back(v);
        if (v > (int64_t{1} << 40)) break;
    }
    auto r3 = erdos_obstruction(SeqPrefix(trip), 2);
    CHECK(r3.increasing_tail);
    CHECK(r3.obstruction);

    // a_i = i: negative bounded gaps
    std::vector<int64_t> lin;
    for (int64_t i = 1; i <= 40; ++i) lin.push_back(i);
    auto rl = erdos_obstruction(SeqPrefix(lin), 5);
    CHECK(rl.max_gap <= 0);
    CHECK(!rl.obstruction);

    CHECK_THROWS_AS(erdos_obstruction(SeqPrefix(lin), 100), domain_error);
}

TEST_CASE("graham_gap_check") {
    // doubling with seed: hypothesis holds, middle gaps are 1
    SeqPrefix dbl({1, 1, 2, 4, 8, 16, 32, 64, 128, 256});
    auto r = graham_gap_check(dbl, 1);
    CHECK(r.hypothesis_ok);
    CHECK(r.L_mid == 1);

    SeqPrefix sparse({1, 10, 100});
    auto rs = graham_gap_check(sparse, 1);
    CHECK(!rs.hypothesis_ok);
    CHECK(rs.first_violation_m == 1);

    std::vector<int64_t> upto;
    for (int64_t i = 1; i <= 12; ++i) upto.push_back(i);
    auto ri = graham_gap_check(SeqPrefix(upto), 2);  // y_2 > y_1, so the tail starts at 2
    CHECK(ri.hypothesis_ok);
    CHECK(ri.L_mid == 1);  // S_Y = [0, 78]
}

TEST_CASE("is_dl_net") {
    CHECK(is_dl_net(IntSet::of({0, 2, 4, 6}), {2, 3}));
    CHECK(!is_dl_net(IntSet::of({0, 2, 5}), {2, 3}));  // gap 3 not divisible by 2
    CHECK(!is_dl_net(IntSet::of({0, 4, 8}), {2, 3}));  // gap 4 >= 3
    CHECK_THROWS_AS(is_dl_net(IntSet::of({1}), {1, 1}), domain_error);
}

TEST_CASE("glue_gap2_to_ap instances") {
    // a = (4,6), l = (30,20): AP of length >= 50, difference 2
    Gap p{0, {4, 6}, {30, 20}};
    ApRun run = glue_gap2_to_ap(p);
    CHECK(run.diff == 2);
    CHECK(run.length >= 50);
    IntSet pts = gap_enumerate(p);
    for (int64_t k = 0; k < run.length; ++k) CHECK(pts.contains(run.start + k * run.diff));

    // a = (1,1), l = (5,5): the full interval [0,10]
    ApRun r11 = glue_gap2_to_ap(Gap{0, {1, 1}, {5, 5}});
    CHECK(r11.diff == 1);
    CHECK(r11.length == 11);
    CHECK(r11.start == 0);

    CHECK_THROWS_AS(glue_gap2_to_ap(Gap{0, {4, 6}, {10, 20}}), domain_error);  // l1 < 5 a2
    CHECK_THROWS_AS(glue_gap2_to_ap(Gap{0, {-2, 3}, {30, 30}}), domain_error);
}

TEST_CASE("glue_gap2_to_ap on random admissible instances") {
    std::mt19937_64 rng(51);
    int done = 0;
    while (done < 120) {
        int64_t a1 = 1 + rng() % 6, a2 = 1 + rng() % 6;
        int64_t l1 = 5 * a2 + rng() % 20, l2 = 5 * a1 + rng() % 20;
        if ((l1 + 1) * (l2 + 1) > 10000) continue;
        ++done;
        int64_t base = rng() % 50;
        Gap p{base, {a1, a2}, {l1, l2}};
        ApRun run = glue_gap2_to_ap(p);
        CHECK(run.diff == std::gcd(a1, a2));
        CHECK(run.length >= l1 + l2);
        IntSet pts = gap_enumerate(p);
        bool all_in = true;
        for (int64_t k = 0; k < run.length; ++k)
            all_in = all_in && pts.contains(run.start + k * run.diff);
        CHECK(all_in);
    }
}

TEST_CASE("ap_in_subset_sums") {
    // each of 1..50 repeated 4 times: S_A contains an AP of length >= 50
    std::vector<int64_t> multi;
    for (int64_t v = 1; v <= 50; ++v)
        for (int c = 0; c < 4; ++c) multi.push_back(v);
    std::sort(multi.begin(), multi.end());
    auto r = ap_in_subset_sums(SeqPrefix(multi), 50);
    CHECK(r.reaches);
    CHECK(r.run.length >= 50);

    // [1..k] distinct: S_A = [0, k(k+1)/2]
    std::vector<int64_t> upto;
    for (int64_t i = 1; i <= 12; ++i) upto.push_back(i);
    auto ri = ap_in_subset_sums(SeqPrefix(upto), 60);
    CHECK(ri.run.length == 79);
    CHECK(ri.run.diff == 1);

    // evens: difference 2 in S_A
    auto re = ap_in_subset_sums(SeqPrefix({2, 4, 6, 8, 10}), 10);
    CHECK(re.run.diff == 2);
    CHECK(re.run.length == 16);  // S = {0,2,...,30}
}

TEST_CASE("complete-prefix criterion gives a full interval") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 100; ++t) {
        // non-decreasing with a_{m+1} <= 1 + sum of prefix
        std::vector<int64_t> e{1};
        int64_t sum = 1;
        for (int i = 0; i < 14; ++i) {
            int64_t hi = sum + 1;
            int64_t v = 1 + static_cast<int64_t>(rng() % hi);
            if (v < e.back()) v = e.back();
            e.push_back(v);
            sum += v;
        }
        IntSet s = subset_sums(SeqPrefix(e));
        CHECK(s == IntSet::interval(0, sum));
    }
}

TEST_CASE("good_partition_probe on a dense multiset") {
    // every integer 1..N repeated C times
    std::vector<int64_t> seq;
    for (int64_t v = 1; v <= 40; ++v)
        for (int c = 0; c < 6; ++c) seq.push_back(v);
    std::sort(seq.begin(), seq.end());
    auto rep = good_partition_probe(SeqPrefix(seq), 2);
    CHECK(rep.growth_ok);
    CHECK(rep.complete);
    CHECK(rep.stabilized_diff == 1);
    // chain lengths grow and the glued difference chain is divisibility-monotone
    int64_t prev_diff = 0;
    int64_t prev_len = 0;
    for (const auto& st : rep.stages) {
        if (!st.glued) break;
        if (prev_diff > 0) CHECK(prev_diff % st.chain_ap.diff == 0);
        CHECK(st.chain_ap.length >= prev_len);
        prev_diff = st.chain_ap.diff;
        prev_len = st.chain_ap.length;
    }
}

TEST_CASE("good_partition_probe flags sparse sequences") {
    std::vector<int64_t> powers;
    for (int i = 1; i <= 16; ++i) powers.push_back(int64_t{1} << i);
    auto rep = good_partition_probe(SeqPrefix(powers), 2);
    CHECK(!rep.growth_ok);
}

TEST_CASE("gluing two APs: stabilized difference divides the gcd chain") {
    // difference-6 AP glued with difference-4 AP -> difference divides gcd(6,4)=2
    Gap g{0, {6, 4}, {30, 30}};
    ApRun run = glue_gap2_to_ap(g);
    CHECK(run.diff == 2);
    CHECK(6 % run.diff == 0);
}
