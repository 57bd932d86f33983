#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lamskel/enumerate.hpp"
#include "lamskel/sampler.hpp"
#include "lamskel/series.hpp"
#include "lamskel/syntax.hpp"
#include "lamskel/typecheck.hpp"

namespace py = pybind11;
using namespace lamskel;

namespace {

// Trees cross the boundary in canonical textual syntax; exact counts as
// Python ints (arbitrary precision on both sides).
py::int_ to_py_int(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list table_to_list(const CoefficientTable& t) {
    py::list out;
    for (const BigInt& v : t.coeffs) out.append(to_py_int(v));
    return out;
}

UcVariant variant_from(const std::string& name) {
    if (name == "grammar") return UcVariant::Grammar;
    if (name == "binder-count") return UcVariant::BinderCount;
    if (name == "marker") return UcVariant::Marker;
    throw py::value_error("unknown uniquely-closable variant: " + name);
}

std::vector<std::string> as_strings(const std::vector<MotzkinSkeleton>& skels) {
    std::vector<std::string> out;
    out.reserve(skels.size());
    for (const auto& s : skels) out.push_back(to_string(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Motzkin-tree skeletons of lambda terms: enumeration, exact counting, "
              "simple-type classification and Boltzmann sampling";

    // term-core operations on canonical syntax
    m.def("skeleton_size", [](const std::string& s) { return size(parse_skeleton(s)); });
    m.def("term_size", [](const std::string& t) { return size(parse_term(t)); });
    m.def("to_skeleton",
          [](const std::string& t) { return to_string(to_skeleton(parse_term(t))); });
    m.def("is_closed", [](const std::string& t) { return is_closed(parse_term(t)); });
    m.def("is_closable", [](const std::string& s) { return is_closable(parse_skeleton(s)); });
    m.def("is_uniquely_closable",
          [](const std::string& s) { return is_uniquely_closable(parse_skeleton(s)); });
    m.def("close_unique",
          [](const std::string& s) { return to_string(close_unique(parse_skeleton(s))); });

    // enumeration
    m.def(
        "enumerate_motzkin",
        [](SizeBudget n) { return as_strings(enumerate_motzkin(n)); }, py::arg("size"));
    m.def(
        "enumerate_closed_terms",
        [](SizeBudget n) {
            std::vector<std::string> out;
            for (const auto& t : enumerate_closed_terms(n)) out.push_back(to_string(t));
            return out;
        },
        py::arg("size"));
    m.def(
        "enumerate_closable",
        [](SizeBudget n) { return as_strings(enumerate_closable(n)); }, py::arg("size"));
    m.def(
        "enumerate_unclosable",
        [](SizeBudget n) { return as_strings(enumerate_unclosable(n)); }, py::arg("size"));
    m.def(
        "enumerate_uniquely_closable",
        [](SizeBudget n, const std::string& variant) {
            return as_strings(enumerate_uniquely_closable(n, variant_from(variant)));
        },
        py::arg("size"), py::arg("variant") = "grammar");
    m.def(
        "enumerate_uniquely_closable_typable",
        [](SizeBudget n) { return as_strings(enumerate_uniquely_closable_typable(n)); },
        py::arg("size"));
    m.def("count_motzkin", &count_motzkin, py::arg("size"));
    m.def("count_closed_terms", &count_closed_terms, py::arg("size"));
    m.def("count_closable", &count_closable, py::arg("size"));
    m.def("count_unclosable", &count_unclosable, py::arg("size"));
    m.def("count_uniquely_closable_direct", &count_uniquely_closable_direct, py::arg("size"));
    m.def("count_uniquely_closable_typable", &count_uniquely_closable_typable, py::arg("size"));
    m.def("count_typable_closed_terms", &count_typable_closed_terms, py::arg("size"));

    // typechecking
    m.def("infer_type", [](const std::string& term) -> py::object {
        InferResult r = infer_type(parse_term(term));
        if (r.status == InferStatus::OpenTerm)
            throw py::value_error("infer_type: term is not closed");
        if (r.status == InferStatus::Untypable) return py::none();
        return py::str(to_string(*r.type));
    });
    m.def("skel_type", [](const std::string& skel) -> py::object {
        auto t = skel_type(parse_skeleton(skel));
        if (!t) return py::none();
        return py::str(to_string(*t));
    });
    m.def("is_typable_skel",
          [](const std::string& s) { return is_typable_skel(parse_skeleton(s)); });
    m.def("is_untypable_closable_skel",
          [](const std::string& s) { return is_untypable_closable_skel(parse_skeleton(s)); });
    m.def("is_uniquely_typable_skel",
          [](const std::string& s) { return is_uniquely_typable_skel(parse_skeleton(s)); });
    m.def(
        "solve_skeleton",
        [](const std::string& skel, std::size_t limit) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& sol : solve_upto(build_constraints(parse_skeleton(skel)), limit))
                out.emplace_back(to_string(sol.term), to_string(sol.type));
            return out;
        },
        py::arg("skeleton"), py::arg("limit"),
        "first `limit` (term, type) labelings of a skeleton in canonical choice order");
    m.def("to_binary_tree",
          [](const std::string& s) { return to_string(to_binary_tree(parse_skeleton(s))); });
    m.def("from_binary_tree", [](const std::string& b) {
        return to_string(from_binary_tree(parse_binary_tree(b)));
    });

    // series and recurrences
    m.def(
        "motzkin_coeffs",
        [](std::size_t upto) { return table_to_list(motzkin_coeffs(upto)); },
        py::arg("upto_exponent"));
    m.def(
        "binary_coeffs", [](std::size_t upto) { return table_to_list(binary_coeffs(upto)); },
        py::arg("upto_exponent"));
    m.def(
        "closable_coeffs",
        [](std::size_t upto) { return table_to_list(closable_coeffs(upto)); },
        py::arg("upto_exponent"));
    m.def(
        "uniquely_closable_coeffs",
        [](std::size_t upto) { return table_to_list(uniquely_closable_coeffs(upto)); },
        py::arg("upto_exponent"));
    m.def(
        "catalan", [](std::size_t k) { return to_py_int(catalan(k)); }, py::arg("k"));
    m.def(
        "recurrence_coeffs",
        [](const std::string& name, std::size_t upto) {
            if (name == "closable") return table_to_list(recurrence_advance(closable_recurrence(), upto));
            if (name == "closable-long")
                return table_to_list(recurrence_advance(closable_recurrence_long(), upto));
            if (name == "uniquely-closable")
                return table_to_list(recurrence_advance(uniquely_closable_recurrence(), upto));
            throw py::value_error("unknown recurrence: " + name);
        },
        py::arg("name"), py::arg("upto_exponent"),
        "advance one of the shipped P-recurrences: closable, closable-long, uniquely-closable");
    m.def(
        "asymptotic_estimate",
        [](const std::string& family, std::uint64_t n) {
            if (family == "motzkin") return asymptotic_estimate(AsymptoticFamily::Motzkin, n);
            if (family == "closable") return asymptotic_estimate(AsymptoticFamily::Closable, n);
            if (family == "uniquely-closable")
                return asymptotic_estimate(AsymptoticFamily::UniquelyClosable, n);
            throw py::value_error("unknown asymptotic family: " + family);
        },
        py::arg("family"), py::arg("exponent"));

    // sampling
    m.def(
        "sample",
        [](const std::string& family, std::uint64_t min_size, std::uint64_t max_size,
           std::uint64_t seed, std::uint64_t tries) -> py::object {
            SamplerConfig cfg;
            cfg.family = family == "uniquely-closable" ? SampleFamily::UniquelyClosable
                                                       : SampleFamily::Closable;
            cfg.min_size = min_size;
            cfg.max_size = max_size;
            cfg.seed = seed;
            cfg.tries_budget = tries;
            auto result = sample(cfg);
            if (!result) return py::none();
            py::dict out;
            out["skeleton"] = to_string(result->skeleton);
            out["size"] = result->size;
            out["attempts"] = result->attempts;
            return out;
        },
        py::arg("family"), py::arg("min_size"), py::arg("max_size"), py::arg("seed") = 0,
        py::arg("tries") = 100000);

#ifdef LAMSKEL_VERSION
    m.attr("__version__") = LAMSKEL_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
