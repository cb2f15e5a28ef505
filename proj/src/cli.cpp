#include "sumlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumlab/completeness.hpp"
#include "sumlab/constructions.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/gap.hpp"
#include "sumlab/harness.hpp"
#include "sumlab/int_set.hpp"
#include "sumlab/lemma_lab.hpp"
#include "sumlab/structure.hpp"
#include "sumlab/sumsets.hpp"
#include "sumlab/zerosumfree.hpp"

namespace sumlab {

namespace {

using nlohmann::json;

json run_json(const ApRun& r) { return json{{"start", r.start}, {"diff", r.diff}, {"len", r.length}}; }

void emit_set(const IntSet& s, const std::string& out_path) {
    if (out_path.empty()) {
        write_int_set(std::cout, s);
    } else {
        std::ofstream f(out_path);
        if (!f) throw domain_error("cannot open output file: " + out_path);
        write_int_set(f, s);
    }
}

struct SumsetArgs {
    std::string op;
    int64_t l = 1;
    std::optional<int64_t> mod;
    std::vector<std::string> inputs;
    std::string out;
    int64_t max_universe = int64_t{1} << 31;
};

int cmd_sumset(const SumsetArgs& a) {
    SumCap cap;
    cap.max_universe = a.max_universe;
    if (a.mod) cap.modulus = a.mod;
    if (a.inputs.empty()) throw domain_error("sumset: need at least one --in file");
    if (a.op == "star") {
        std::vector<IntSet> sets;
        for (const auto& p : a.inputs) sets.push_back(read_int_set_file(p));
        if (sets.size() == 1 && a.l > 1)
            sets.assign(static_cast<size_t>(a.l), sets[0]);  // l copies of the one set
        emit_set(star_sum(sets, cap), a.out);
        return 0;
    }
    IntSet in = read_int_set_file(a.inputs[0]);
    if (a.op == "iter")
        emit_set(iterated_sumset(in, a.l, cap), a.out);
    else if (a.op == "distinct")
        emit_set(distinct_sumset(in, a.l, cap), a.out);
    else if (a.op == "subset")
        emit_set(subset_sums(in, cap), a.out);
    else
        throw domain_error("sumset: unknown --op " + a.op);
    return 0;
}

json gap_json(const Gap& g) {
    return json{{"literal", format_gap(g)},
                {"base", g.base},
                {"diffs", g.diffs},
                {"lengths", g.lengths},
                {"rank", g.rank()},
                {"volume", g.volume()},
                {"cardinality", g.box_size()}};
}

json bucket_json(const BucketReport& rep) {
    json buckets = json::array();
    for (const auto& b : rep.buckets) {
        json o{{"index", b.index}, {"m_lo", b.m_lo}, {"m_hi", b.m_hi}, {"size", b.size}};
        if (rep.scheme == BucketScheme::dyadic) {
            o["prod_ok"] = b.prod_ok;
            o["size_ok"] = b.size_ok;
        }
        buckets.push_back(std::move(o));
    }
    json out{{"scheme", rep.scheme == BucketScheme::dyadic ? "dyadic" : "harmonic"},
             {"card", rep.card},
             {"buckets", std::move(buckets)}};
    if (rep.scheme == BucketScheme::dyadic) out["q"] = rep.q;
    if (rep.chosen) {
        out["chosen"] = json{{"index", rep.chosen->index},
                             {"size", rep.chosen->set.size()},
                             {"l1", rep.chosen->l1},
                             {"t", rep.chosen->t}};
    } else {
        out["chosen"] = nullptr;
    }
    return out;
}

json extremal_json(const ExtremalReport& r) {
    return json{{"expected_card", r.expected_card},
                {"actual_card", r.actual_card},
                {"card_ok", r.card_ok},
                {"l", r.l},
                {"ap_len", r.ap_len},
                {"ap_bound", r.ap_bound},
                {"edge_len", r.edge_len},
                {"edge_found", r.edge_found},
                {"ap_ok", r.ap_ok},
                {"ap_run", run_json(r.ap_run)},
                {"pass", r.pass}};
}

json params_json(const ConstructionParams& p) {
    json o{{"kind", p.kind}, {"d", p.d},         {"n", p.n},       {"m", p.m},
           {"delta", p.delta}, {"a", p.a},       {"b", p.b},       {"b_i", p.b_i},
           {"diffs", p.diffs}};
    if (p.l) o["l"] = *p.l;
    if (p.modulus) o["modulus"] = *p.modulus;
    return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"sumset structure toolkit"};
    app.require_subcommand(1);

    SumsetArgs sa;
    auto* sum = app.add_subcommand("sumset", "sum engines: lA, l*A, star sums, subset sums");
    sum->add_option("--op", sa.op, "iter|distinct|star|subset")->required();
    sum->add_option("--l", sa.l, "number of summands");
    sum->add_option("--mod", sa.mod, "reduce modulo N");
    sum->add_option("--in", sa.inputs, "input set file(s); star takes several")->required();
    sum->add_option("--out", sa.out, "output file (default stdout)");
    sum->add_option("--max-universe", sa.max_universe, "universe cap");

    struct {
        std::string in;
        std::optional<int64_t> mod;
        std::optional<int64_t> max_diff;
    } lap;
    auto* ap = app.add_subcommand("longest-ap", "longest arithmetic progression in a set");
    ap->add_option("--in", lap.in)->required();
    ap->add_option("--mod", lap.mod);
    ap->add_option("--max-diff", lap.max_diff);

    struct {
        std::string in;
        int rank = 2;
        int64_t budget = 20000;
    } fg;
    auto* fgap = app.add_subcommand("find-gap", "best-found proper GAP certificate");
    fgap->add_option("--in", fg.in)->required();
    fgap->add_option("--rank", fg.rank);
    fgap->add_option("--budget", fg.budget);

    struct {
        std::string kind;
        int d = 2;
        int64_t n = 0, m = 0;
        std::optional<int64_t> l;
        double delta = 0.1;
        bool verify = false;
        std::string out;
    } con;
    auto* cons = app.add_subcommand("construct", "extremal constructions and their verifier");
    cons->add_option("--kind", con.kind, "planar|general|mod")->required();
    cons->add_option("--d", con.d);
    cons->add_option("--n", con.n)->required();
    cons->add_option("--m", con.m)->required();
    cons->add_option("--l", con.l);
    cons->add_option("--delta", con.delta);
    cons->add_flag("--verify", con.verify);
    cons->add_option("--out", con.out, "write the set file here");

    struct {
        std::string scheme, in;
    } bk;
    auto* buck = app.add_subcommand("buckets", "multiplicity bucket report");
    buck->add_option("--scheme", bk.scheme, "dyadic|harmonic")->required();
    buck->add_option("--in", bk.in)->required();

    struct {
        std::string in;
    } gb;
    auto* greedy = app.add_subcommand("greedy-bigsum", "small subset with big distinct sumset");
    greedy->add_option("--in", gb.in)->required();

    struct {
        std::string in;
        int64_t n = 0;
        int depth = 2;
    } ca;
    auto* comp = app.add_subcommand("complete-analyze", "good-partition pipeline on a sequence prefix");
    comp->add_option("--in", ca.in)->required();
    comp->add_option("--n", ca.n)->required();
    comp->add_option("--depth", ca.depth);

    struct {
        int64_t p = 0;
        bool count = false, max_size = false;
        uint64_t budget = 1'000'000'000;
    } zs;
    auto* zsf = app.add_subcommand("zsf", "zero-sum-free counting mod p");
    zsf->add_option("--p", zs.p)->required();
    zsf->add_flag("--count", zs.count);
    zsf->add_flag("--max-size", zs.max_size);
    zsf->add_option("--budget", zs.budget);

    struct {
        int64_t n = 0;
    } ns;
    auto* nsmall = app.add_subcommand("nsmall", "count sets of distinct positive integers with sum < n");
    nsmall->add_option("--n", ns.n)->required();

    struct {
        std::string config, out, json_out;
        int workers = 1;
    } sw;
    auto* sweep = app.add_subcommand("threshold-sweep", "grid sweep; emits CSV");
    sweep->add_option("--config", sw.config)->required();
    sweep->add_option("--out", sw.out)->required();
    sweep->add_option("--workers", sw.workers);
    sweep->add_option("--json", sw.json_out, "JSON mirror of the records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sum->parsed()) return cmd_sumset(sa);
        if (ap->parsed()) {
            LongestApOptions opt;
            opt.max_diff = lap.max_diff;
            ApRun run;
            if (lap.mod) {
                IntSet raw = read_int_set_file(lap.in);
                run = longest_ap_mod(ResidueSet(*lap.mod, raw.elements()), opt);
            } else {
                run = longest_ap(read_int_set_file(lap.in), opt);
            }
            std::cout << run_json(run).dump(2) << '\n';
            return 0;
        }
        if (fgap->parsed()) {
            FindGapOptions opt;
            opt.max_rank = fg.rank;
            opt.budget = fg.budget;
            auto g = find_proper_gap(read_int_set_file(fg.in), opt);
            std::cout << (g ? gap_json(*g) : json(nullptr)).dump(2) << '\n';
            return 0;
        }
        if (cons->parsed()) {
            json out;
            if (con.kind == "planar" || con.kind == "general") {
                Construction c = con.kind == "planar"
                                     ? build_planar(con.n, con.m, con.l)
                                     : build_general(con.d, con.n, con.m, con.delta, con.l);
                out["params"] = params_json(c.params);
                out["card"] = c.set.size();
                if (con.verify) {
                    int64_t l = con.l.value_or(con.n / static_cast<int64_t>(4.1 * con.m * con.m));
                    out["report"] = extremal_json(verify_extremal(c, l));
                }
                if (!con.out.empty()) emit_set(c.set, con.out);
            } else if (con.kind == "mod") {
                if (!con.l) throw domain_error("construct --kind mod requires --l");
                ModConstruction c = build_mod(con.d, con.n, con.m, *con.l, con.delta);
                out["params"] = params_json(c.params);
                out["card"] = c.set.size();
                if (con.verify) out["report"] = extremal_json(verify_extremal(c, *con.l));
                if (!con.out.empty()) emit_set(c.set.bits(), con.out);
            } else {
                throw domain_error("construct: unknown --kind " + con.kind);
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        if (buck->parsed()) {
            BucketScheme scheme;
            if (bk.scheme == "dyadic")
                scheme = BucketScheme::dyadic;
            else if (bk.scheme == "harmonic")
                scheme = BucketScheme::harmonic;
            else
                throw domain_error("buckets: unknown --scheme " + bk.scheme);
            std::cout << bucket_json(multiplicity_buckets(read_int_set_file(bk.in), scheme)).dump(2)
                      << '\n';
            return 0;
        }
        if (greedy->parsed()) {
            auto r = greedy_big_sum_subset(read_int_set_file(gb.in));
            std::cout << json{{"chosen", r.chosen}, {"T", r.T}, {"size", r.final_size}}.dump(2)
                      << '\n';
            return 0;
        }
        if (comp->parsed()) {
            auto rep = good_partition_probe(read_seq_prefix_file(ca.in), ca.depth);
            json stages = json::array();
            for (const auto& st : rep.stages) {
                stages.push_back(json{{"index", st.index},
                                      {"block_begin", st.block_begin},
                                      {"block_end", st.block_end},
                                      {"block_ap", run_json(st.block_ap)},
                                      {"glued", st.glued},
                                      {"chain_ap", run_json(st.chain_ap)},
                                      {"note", st.note}});
            }
            json out{{"prefix_len", rep.prefix_len},
                     {"growth_ok", rep.growth_ok},
                     {"min_tail_margin", rep.min_tail_margin},
                     {"stages", std::move(stages)},
                     {"stabilized_diff", rep.stabilized_diff},
                     {"longest_chain", run_json(rep.longest_chain)},
                     {"target_n", ca.n},
                     {"reaches_n", rep.longest_chain.length >= ca.n},
                     {"complete", rep.complete},
                     {"stage_marker", rep.stage_marker}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        if (zsf->parsed()) {
            auto r = count_zero_sum_free(zs.p, zs.budget);
            json out{{"p", r.p}, {"empty_set_included", r.empty_set_included}};
            if (zs.count || !zs.max_size) {
                out["count"] = std::to_string(r.count);  // exact integer as string
                out["log2_count_over_sqrt_p"] = r.log2_count_over_sqrt;
            }
            if (zs.max_size || !zs.count) out["max_size"] = r.max_size;
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        if (nsmall->parsed()) {
            BigUint c = n_small_count(ns.n);
            json out{{"n", ns.n},
                     {"count", c.to_string()},
                     {"log2_count", c.log2()},
                     {"log2_count_over_sqrt_n", c.log2() / std::sqrt(static_cast<double>(ns.n))}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        if (sweep->parsed()) {
            auto cfg = parse_sweep_config_file(sw.config);
            auto records = threshold_sweep(cfg, sw.workers);
            std::ofstream f(sw.out);
            if (!f) throw domain_error("cannot open output file: " + sw.out);
            write_sweep_csv(f, records);
            if (!sw.json_out.empty()) {
                std::ofstream jf(sw.json_out);
                if (!jf) throw domain_error("cannot open output file: " + sw.json_out);
                write_sweep_json(jf, records);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace sumlab
