#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/int_set.hpp"

namespace sumlab {

// Flat key=value config, '#' comments, repeated keys form grids:
//   n=1000000
//   l=16 l=64            (either repeated keys or several on one line)
//   card=400 card=2500
//   generator=interval generator=random generator=planar
//   seed=42 rng=mt19937_64 max_diff=64 timing=wall
// Grid points run in declaration order: generator (outer), l, card (inner).
struct SweepConfig {
    int64_t n = 1'000'000;
    std::vector<int64_t> ls;
    std::vector<int64_t> cards;
    std::vector<std::string> generators;  // interval|random|planar|general2|general3|mod2|mod3
    uint64_t seed = 0;
    std::string rng = "mt19937_64";  // or splitmix64
    int64_t max_diff = 64;           // ascending-scan bound for longest_ap
    int64_t gap_budget = 4000;       // find_proper_gap growth budget
    double delta = 0.1;
    bool timing = true;  // timing=none zeroes the ms column (byte-stable CSV)
};

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_file(const std::string& path);

struct SweepRecord {
    int64_t n = 0;
    int64_t l = 0;
    int64_t m = 0;  // side (generators with |A| = m^d); = card otherwise
    int64_t card = 0;
    std::string generator;
    int64_t ap_len = -1;   // -1 marks a per-point failure (sweep continues)
    int64_t gap_rank = -1;
    int64_t gap_vol = -1;
    int64_t ms = 0;
    std::string error;  // in-row failure note (not a CSV column)
};

// One record per grid point, in config order regardless of worker completion
// order.  Deterministic for a fixed config and seed (modulo the ms column,
// which timing=none pins to 0).
std::vector<SweepRecord> threshold_sweep(const SweepConfig& config, int workers = 1);

// Normative column order, versioned in the leading comment line.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records);

// Seedable generators by algorithm identifier, for cross-implementation
// comparable records.
uint64_t named_rng_next(const std::string& algorithm, uint64_t& state);
IntSet random_subset(const std::string& algorithm, uint64_t seed, int64_t card, int64_t lo,
                     int64_t hi);

}  // namespace sumlab
