#include "sumlab/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "sumlab/constructions.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/structure.hpp"
#include "sumlab/sumsets.hpp"

namespace sumlab {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t named_rng_next(const std::string& algorithm, uint64_t& state) {
    if (algorithm == "splitmix64") return splitmix64(state);
    if (algorithm == "mt19937_64") {
        // One fresh draw per state step keeps the stream a pure function of
        // the state, which is what record reproducibility needs.
        std::mt19937_64 rng(state);
        state += 0x9e3779b97f4a7c15ULL;
        return rng();
    }
    throw domain_error("unknown rng algorithm: " + algorithm);
}

IntSet random_subset(const std::string& algorithm, uint64_t seed, int64_t card, int64_t lo,
                     int64_t hi) {
    if (hi - lo + 1 < card) throw domain_error("random_subset: range too small for card");
    IntSet out(hi);
    uint64_t state = seed;
    int64_t placed = 0;
    while (placed < card) {
        int64_t x = lo + static_cast<int64_t>(named_rng_next(algorithm, state) %
                                              static_cast<uint64_t>(hi - lo + 1));
        if (!out.contains(x)) {
            out.insert(x);
            ++placed;
        }
    }
    return out;
}

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw domain_error("config line " + std::to_string(lineno) +
                                   ": expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            auto as_i64 = [&] {
                try {
                    return std::stoll(val);
                } catch (const std::exception&) {
                    throw domain_error("config line " + std::to_string(lineno) + ": bad integer '" +
                                       val + "' for " + key);
                }
            };
            if (key == "n")
                cfg.n = as_i64();
            else if (key == "l")
                cfg.ls.push_back(as_i64());
            else if (key == "card")
                cfg.cards.push_back(as_i64());
            else if (key == "generator")
                cfg.generators.push_back(val);
            else if (key == "seed")
                cfg.seed = static_cast<uint64_t>(as_i64());
            else if (key == "rng")
                cfg.rng = val;
            else if (key == "max_diff")
                cfg.max_diff = as_i64();
            else if (key == "gap_budget")
                cfg.gap_budget = as_i64();
            else if (key == "delta")
                cfg.delta = std::stod(val);
            else if (key == "timing")
                cfg.timing = val != "none";
            else
                throw domain_error("config line " + std::to_string(lineno) + ": unknown key '" +
                                   key + "'");
        }
    }
    if (cfg.ls.empty() || cfg.cards.empty() || cfg.generators.empty())
        throw domain_error("config needs at least one l=, card= and generator=");
    return cfg;
}

SweepConfig parse_sweep_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open config file: " + path);
    return parse_sweep_config(f);
}

namespace {

struct Point {
    std::string generator;
    int64_t l, card;
    size_t index;
};

SweepRecord run_point(const SweepConfig& cfg, const Point& pt) {
    SweepRecord rec;
    rec.n = cfg.n;
    rec.l = pt.l;
    rec.card = pt.card;
    rec.m = pt.card;
    rec.generator = pt.generator;
    auto t0 = std::chrono::steady_clock::now();
    try {
        IntSet a(0);
        std::vector<int64_t> extra_diffs;
        std::optional<int64_t> modulus;
        std::optional<ConstructionParams> built;
        if (pt.generator == "interval") {
            a = IntSet::interval(1, pt.card);
        } else if (pt.generator == "random") {
            uint64_t seed = cfg.seed * 0x9e3779b97f4a7c15ULL + pt.index;
            a = random_subset(cfg.rng, seed, pt.card, 1, cfg.n);
        } else if (pt.generator == "planar") {
            int64_t m = std::llround(std::sqrt(static_cast<double>(pt.card)));
            auto c = build_planar(cfg.n, m, pt.l);
            a = std::move(c.set);
            built = c.params;
            rec.m = m;
            rec.card = a.size();
        } else if (pt.generator == "general2" || pt.generator == "general3") {
            int d = pt.generator.back() - '0';
            int64_t m = std::llround(std::pow(static_cast<double>(pt.card), 1.0 / d));
            auto c = build_general(d, cfg.n, m, cfg.delta, pt.l);
            a = std::move(c.set);
            built = c.params;
            rec.m = m;
            rec.card = a.size();
        } else if (pt.generator == "mod2" || pt.generator == "mod3") {
            int d = pt.generator.back() - '0';
            int64_t m = std::llround(std::pow(static_cast<double>(pt.card), 1.0 / d));
            auto c = build_mod(d, cfg.n, m, pt.l, cfg.delta);
            a = c.set.bits();
            built = c.params;
            modulus = cfg.n;
            rec.m = m;
            rec.card = a.size();
        } else {
            throw domain_error("unknown generator: " + pt.generator);
        }
        if (built) {
            for (size_t i = 0; i < built->diffs.size(); ++i) {
                extra_diffs.push_back(built->diffs[i]);
                for (size_t j = i + 1; j < built->diffs.size(); ++j) {
                    extra_diffs.push_back(built->diffs[j] + built->diffs[i]);
                    extra_diffs.push_back(built->diffs[j] - built->diffs[i]);
                }
            }
        }

        SumCap cap;
        cap.modulus = modulus;
        cap.max_universe = std::max<int64_t>(int64_t{1} << 31, 2 * pt.l * a.universe_bound());
        // Lattice constructions go through the exact identity
        // l(B_1+...+B_d) = lB_1+...+lB_d instead of generic doubling.
        IntSet la = built ? construction_multiple(*built, pt.l) : iterated_sumset(a, pt.l, cap);

        LongestApOptions apo;
        apo.max_diff = cfg.max_diff;
        apo.extra_diffs = extra_diffs;
        if (modulus) {
            ResidueSet lam(*modulus, la.elements());
            rec.ap_len = longest_ap_mod(lam, apo).length;
        } else {
            rec.ap_len = longest_ap(la, apo).length;
        }

        FindGapOptions fgo;
        fgo.budget = cfg.gap_budget;
        fgo.ap = apo;
        if (!modulus) {
            auto g = find_proper_gap(la, fgo);
            if (g) {
                rec.gap_rank = g->rank();
                rec.gap_vol = g->volume();
            } else {
                rec.gap_rank = 0;
                rec.gap_vol = 0;
            }
        } else {
            rec.gap_rank = 0;  // rank search is integer-only; recorded as absent
            rec.gap_vol = 0;
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
        rec.ap_len = rec.gap_rank = rec.gap_vol = -1;
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.ms = cfg.timing
                 ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                 : 0;
    return rec;
}

}  // namespace

std::vector<SweepRecord> threshold_sweep(const SweepConfig& cfg, int workers) {
    std::vector<Point> points;
    size_t idx = 0;
    for (const auto& gen : cfg.generators)
        for (int64_t l : cfg.ls)
            for (int64_t card : cfg.cards) points.push_back({gen, l, card, idx++});
    std::vector<SweepRecord> records(points.size());
    if (workers <= 1) {
        for (const auto& pt : points) records[pt.index] = run_point(cfg, pt);
        return records;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            records[points[i].index] = run_point(cfg, points[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "# sumlab-sweep-v1 columns: n,l,m,card,generator,ap_len,gap_rank,gap_vol,ms\n";
    out << "n,l,m,card,generator,ap_len,gap_rank,gap_vol,ms\n";
    for (const auto& r : records)
        out << r.n << ',' << r.l << ',' << r.m << ',' << r.card << ',' << r.generator << ','
            << r.ap_len << ',' << r.gap_rank << ',' << r.gap_vol << ',' << r.ms << '\n';
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json o{{"n", r.n},           {"l", r.l},
                         {"m", r.m},           {"card", r.card},
                         {"generator", r.generator}, {"ap_len", r.ap_len},
                         {"gap_rank", r.gap_rank},   {"gap_vol", r.gap_vol},
                         {"ms", r.ms}};
        if (!r.error.empty()) o["error"] = r.error;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace sumlab
