#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumlab/completeness.hpp"
#include "sumlab/constructions.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/gap.hpp"
#include "sumlab/int_set.hpp"
#include "sumlab/lemma_lab.hpp"
#include "sumlab/structure.hpp"
#include "sumlab/sumsets.hpp"
#include "sumlab/zerosumfree.hpp"

namespace py = pybind11;
using namespace sumlab;

namespace {

SumCap make_cap(std::optional<int64_t> mod, int64_t max_universe) {
    SumCap cap;
    cap.modulus = mod;
    cap.max_universe = max_universe;
    return cap;
}

LongestApOptions make_ap_opts(std::optional<int64_t> max_diff, std::vector<int64_t> extra) {
    LongestApOptions o;
    o.max_diff = max_diff;
    o.extra_diffs = std::move(extra);
    return o;
}

}  // namespace

PYBIND11_MODULE(_sumlab, m) {
    m.doc() = "sumset structure toolkit: iterated/distinct/star/subset sum engines, "
              "GAP calculus, AP finders, extremal constructions and counters";

    py::register_exception<sumlab::domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<IntSet>(m, "IntSet")
        .def(py::init([](const std::vector<int64_t>& xs) { return IntSet::from_elements(xs); }),
             py::arg("elements"))
        .def_static("interval", &IntSet::interval, py::arg("lo"), py::arg("hi"))
        .def_property_readonly("universe_bound", &IntSet::universe_bound)
        .def("__len__", &IntSet::size)
        .def("__contains__", &IntSet::contains)
        .def("elements", &IntSet::elements)
        .def("min", &IntSet::min)
        .def("max", &IntSet::max)
        .def("__eq__", [](const IntSet& a, const IntSet& b) { return a == b; })
        .def("__repr__", [](const IntSet& s) {
            return "IntSet(|A|=" + std::to_string(s.size()) + ", bound=" +
                   std::to_string(s.universe_bound()) + ")";
        });

    py::class_<ResidueSet>(m, "ResidueSet")
        .def(py::init<int64_t, const std::vector<int64_t>&>(), py::arg("modulus"),
             py::arg("elements"))
        .def_property_readonly("modulus", &ResidueSet::modulus)
        .def("__len__", &ResidueSet::size)
        .def("__contains__", &ResidueSet::contains)
        .def("elements", &ResidueSet::elements);

    py::class_<SeqPrefix>(m, "SeqPrefix")
        .def(py::init<std::vector<int64_t>>(), py::arg("elements"))
        .def("elements", &SeqPrefix::elements)
        .def("total", &SeqPrefix::total)
        .def("__len__", &SeqPrefix::declared_length);

    py::class_<Gap>(m, "Gap")
        .def(py::init([](int64_t base, std::vector<int64_t> diffs, std::vector<int64_t> lengths) {
                 return Gap{base, std::move(diffs), std::move(lengths)};
             }),
             py::arg("base"), py::arg("diffs"), py::arg("lengths"))
        .def_readonly("base", &Gap::base)
        .def_readonly("diffs", &Gap::diffs)
        .def_readonly("lengths", &Gap::lengths)
        .def_property_readonly("rank", &Gap::rank)
        .def_property_readonly("volume", &Gap::volume)
        .def("__repr__", [](const Gap& g) { return format_gap(g); });

    py::class_<ApRun>(m, "ApRun")
        .def_readonly("start", &ApRun::start)
        .def_readonly("diff", &ApRun::diff)
        .def_readonly("length", &ApRun::length)
        .def("__repr__", [](const ApRun& r) {
            return "ApRun(start=" + std::to_string(r.start) + ", diff=" + std::to_string(r.diff) +
                   ", length=" + std::to_string(r.length) + ")";
        });

    m.def("sumset", py::overload_cast<const IntSet&, const IntSet&>(&sumset), py::arg("a"),
          py::arg("b"));
    m.def("sumset_mod", py::overload_cast<const ResidueSet&, const ResidueSet&>(&sumset),
          py::arg("a"), py::arg("b"));
    m.def("seq_count", &seq_count, py::arg("a"), py::arg("n"));

    m.def(
        "iterated_sumset",
        [](const IntSet& a, int64_t l, std::optional<int64_t> mod, int64_t max_universe) {
            return iterated_sumset(a, l, make_cap(mod, max_universe));
        },
        py::arg("a"), py::arg("l"), py::arg("mod") = std::nullopt,
        py::arg("max_universe") = int64_t{1} << 31);
    m.def(
        "distinct_sumset",
        [](const IntSet& a, int64_t l, std::optional<int64_t> mod, int64_t max_universe) {
            return distinct_sumset(a, l, make_cap(mod, max_universe));
        },
        py::arg("a"), py::arg("l"), py::arg("mod") = std::nullopt,
        py::arg("max_universe") = int64_t{1} << 31);
    m.def(
        "star_sum",
        [](const std::vector<IntSet>& sets, std::optional<int64_t> mod) {
            return star_sum(sets, make_cap(mod, int64_t{1} << 31));
        },
        py::arg("sets"), py::arg("mod") = std::nullopt);
    m.def(
        "subset_sums",
        [](const std::vector<int64_t>& xs, std::optional<int64_t> mod, int64_t max_universe) {
            return subset_sums(xs, make_cap(mod, max_universe));
        },
        py::arg("multiset"), py::arg("mod") = std::nullopt,
        py::arg("max_universe") = int64_t{1} << 31);

    m.def("gap_enumerate", &gap_enumerate, py::arg("g"), py::arg("enum_cap") = kDefaultEnumCap);
    m.def("gap_cardinality", &gap_cardinality, py::arg("g"), py::arg("enum_cap") = kDefaultEnumCap);
    m.def(
        "gap_is_proper",
        [](const Gap& g, int64_t cap) {
            auto r = gap_is_proper(g, cap);
            return py::make_tuple(r.proper, r.vanishing);
        },
        py::arg("g"), py::arg("enum_cap") = kDefaultEnumCap);
    m.def("gap_add", &gap_add);
    m.def("gap_scale", &gap_scale);
    m.def("gap_divide", &gap_divide);
    m.def("verify_gap_in_set", &verify_gap_in_set, py::arg("g"), py::arg("s"),
          py::arg("enum_cap") = kDefaultEnumCap);
    m.def("parse_gap", &parse_gap);
    m.def("format_gap", &format_gap);

    m.def(
        "longest_ap",
        [](const IntSet& s, std::optional<int64_t> max_diff, std::vector<int64_t> extra) {
            return longest_ap(s, make_ap_opts(max_diff, std::move(extra)));
        },
        py::arg("s"), py::arg("max_diff") = std::nullopt,
        py::arg("extra_diffs") = std::vector<int64_t>{});
    m.def(
        "longest_ap_mod",
        [](const ResidueSet& s, std::optional<int64_t> max_diff) {
            return longest_ap_mod(s, make_ap_opts(max_diff, {}));
        },
        py::arg("s"), py::arg("max_diff") = std::nullopt);
    m.def(
        "find_proper_gap",
        [](const IntSet& s, int max_rank, int64_t budget) {
            FindGapOptions opt;
            opt.max_rank = max_rank;
            opt.budget = budget;
            return find_proper_gap(s, opt);
        },
        py::arg("s"), py::arg("max_rank") = 2, py::arg("budget") = 20000);

    m.def("pair_representation_counts", [](const IntSet& a) {
        auto rc = pair_representation_counts(a);
        py::dict out;
        for (size_t x = 0; x < rc.r.size(); ++x)
            if (rc.r[x] > 0) out[py::int_(x)] = rc.r[x];
        return out;
    });
    m.def("greedy_big_sum_subset", [](const IntSet& a) {
        auto r = greedy_big_sum_subset(a);
        return py::make_tuple(r.chosen, r.T, r.final_size);
    });

    m.def("glue_gap2_to_ap", &glue_gap2_to_ap, py::arg("p"));
    m.def(
        "ap_in_subset_sums",
        [](const std::vector<int64_t>& xs, int64_t n) {
            auto r = ap_in_subset_sums(SeqPrefix(xs), n);
            return py::make_tuple(r.run, r.reaches);
        },
        py::arg("multiset"), py::arg("n"));
    m.def(
        "is_dl_net",
        [](const IntSet& b, int64_t d, int64_t L) { return is_dl_net(b, NetParams{d, L}); },
        py::arg("b"), py::arg("d"), py::arg("L"));

    m.def("is_zero_sum_free", &is_zero_sum_free, py::arg("a"));
    m.def(
        "count_zero_sum_free",
        [](int64_t p) {
            auto r = count_zero_sum_free(p);
            return py::make_tuple(r.count, r.max_size);
        },
        py::arg("p"));
    m.def("n_small_count", [](int64_t n) { return n_small_count(n).to_string(); }, py::arg("n"));

    m.def(
        "build_planar",
        [](int64_t n, int64_t m) {
            auto c = build_planar(n, m);
            return py::make_tuple(c.set, c.params.diffs);
        },
        py::arg("n"), py::arg("m"));
    m.def(
        "verify_planar",
        [](int64_t n, int64_t m, int64_t l) {
            auto c = build_planar(n, m, l);
            auto r = verify_extremal(c, l);
            return py::make_tuple(r.pass, r.ap_len, r.ap_bound, r.actual_card);
        },
        py::arg("n"), py::arg("m"), py::arg("l"));
}
