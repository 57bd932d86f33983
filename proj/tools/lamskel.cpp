// lamskel: enumeration, exact counting, classification, sampling and
// sequence cross-checks for Motzkin-tree skeletons of lambda terms.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamskel/enumerate.hpp"
#include "lamskel/golden.hpp"
#include "lamskel/sampler.hpp"
#include "lamskel/series.hpp"
#include "lamskel/syntax.hpp"
#include "lamskel/typecheck.hpp"

namespace {

using json = nlohmann::json;
using namespace lamskel;

#ifndef LAMSKEL_DATA_DIR
#define LAMSKEL_DATA_DIR "data"
#endif

std::string default_data_dir() {
    if (const char* env = std::getenv("LAMSKEL_DATA_DIR")) return env;
    return LAMSKEL_DATA_DIR;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LAMSKEL_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

// Family and format names are hyphenated; underscore spellings are accepted
// and normalized.
CLI::CheckedTransformer name_set(std::vector<std::string> names) {
    std::map<std::string, std::string> mapping;
    for (const std::string& name : names) {
        mapping[name] = name;
        std::string underscored = name;
        for (char& c : underscored)
            if (c == '-') c = '_';
        mapping[underscored] = name;
    }
    return CLI::CheckedTransformer(mapping);
}

// ---- count -------------------------------------------------------------------

// Counts are reported per (index_kind, index): size-indexed requests at size s
// read series tables at exponent s+1; exponent-indexed requests on
// enumeration-backed families count objects of size e-1 (exponent 0 holds no
// object). The caller always picks the indexing explicitly.
struct CountRequest {
    std::string family;
    std::string index_kind;  // "size", "exponent" or "k" (catalan)
    std::uint64_t from = 0;
    std::uint64_t upto = 0;
    std::string method;  // auto|enumerate|series|recurrence|direct
};

SkeletonClassCounts classify_cache_get(std::map<std::uint64_t, SkeletonClassCounts>& cache,
                                       std::uint64_t n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, classify_skeletons(static_cast<SizeBudget>(n))).first;
    return it->second;
}

// Shared per-run state: series tables are built once to the end of the
// requested range, recurrences at least to their order.
struct CountState {
    std::uint64_t max_exponent = 0;
    std::map<std::string, CoefficientTable> tables;
    std::map<std::uint64_t, SkeletonClassCounts> classify_cache;

    template <typename Build>
    const CoefficientTable& table(const std::string& key, Build build) {
        auto it = tables.find(key);
        if (it == tables.end()) it = tables.emplace(key, build()).first;
        return it->second;
    }
};

BigInt count_value(const CountRequest& req, std::uint64_t index, CountState& state) {
    const bool by_exponent = req.index_kind == "exponent";
    const std::string& fam = req.family;
    const std::string& method = req.method;
    auto& classify_cache = state.classify_cache;

    if (fam == "catalan") return catalan(index);

    // series-backed families
    if (method == "auto" || method == "series" || method == "recurrence") {
        const std::size_t exponent = by_exponent ? index : index + SizePolicy::gf_offset;
        const std::size_t upto = state.max_exponent;
        auto advanced = [&](const RecurrenceSpec& spec) {
            return recurrence_advance(spec, std::max<std::size_t>(upto, spec.order - 1));
        };
        if (fam == "motzkin" && method != "recurrence")
            return state.table("motzkin", [&] { return motzkin_coeffs(upto); })
                .at_exponent(exponent);
        if (fam == "binary")
            return state.table("binary", [&] { return binary_coeffs(upto); })
                .at_exponent(exponent);
        if (fam == "closable") {
            if (method == "recurrence")
                return state.table("closable/rec", [&] { return advanced(closable_recurrence()); })
                    .at_exponent(exponent);
            return state.table("closable", [&] { return closable_coeffs(upto); })
                .at_exponent(exponent);
        }
        if (fam == "uniquely-closable") {
            if (method == "recurrence")
                return state
                    .table("uniquely-closable/rec",
                           [&] { return advanced(uniquely_closable_recurrence()); })
                    .at_exponent(exponent);
            return state
                .table("uniquely-closable", [&] { return uniquely_closable_coeffs(upto); })
                .at_exponent(exponent);
        }
        if (fam == "unclosable" && method != "recurrence")
            return state.table("motzkin", [&] { return motzkin_coeffs(upto); })
                       .at_exponent(exponent) -
                   state.table("closable", [&] { return closable_coeffs(upto); })
                       .at_exponent(exponent);
    }

    // enumeration-backed families
    if (by_exponent && index == 0) return 0;
    std::uint64_t n = by_exponent ? index - SizePolicy::gf_offset : index;
    auto budget = static_cast<SizeBudget>(n);
    if (fam == "motzkin") return count_motzkin(budget);
    if (fam == "closable") return count_closable(budget);
    if (fam == "unclosable") return count_unclosable(budget);
    if (fam == "uniquely-closable")
        return method == "direct" ? count_uniquely_closable_direct(budget)
                                  : count_uniquely_closable(budget);
    if (fam == "closed-terms") return count_closed_terms(budget);
    if (fam == "typable") return classify_cache_get(classify_cache, n).typable;
    if (fam == "untypable") return classify_cache_get(classify_cache, n).untypable_closable;
    if (fam == "uniquely-typable") return classify_cache_get(classify_cache, n).uniquely_typable;
    if (fam == "uniquely-closable-typable")
        return count_uniquely_closable_typable(budget);
    if (fam == "typable-closed-terms") return count_typable_closed_terms(budget);
    throw CLI::ValidationError("count", "family '" + fam + "' does not support method '" +
                                            method + "'");
}

int run_count(const CountRequest& req, const std::string& format) {
    CountState state;
    state.max_exponent =
        req.index_kind == "exponent" ? req.upto : req.upto + SizePolicy::gf_offset;
    if (format == "csv") std::cout << "index_kind,index,family,value\n";
    for (std::uint64_t i = req.from; i <= req.upto; ++i) {
        BigInt v = count_value(req, i, state);
        if (format == "csv") {
            std::cout << req.index_kind << ',' << i << ',' << req.family << ',' << v.str()
                      << '\n';
        } else if (format == "bfile") {
            std::cout << i << ' ' << v.str() << '\n';
        } else {
            json row{{"index_kind", req.index_kind},
                     {"index", i},
                     {"family", req.family},
                     {"value", v.str()}};
            std::cout << row.dump() << '\n';
        }
    }
    return 0;
}

// ---- enumerate -----------------------------------------------------------------

int run_enumerate(const std::string& family, std::uint64_t size, bool count_only,
                  const std::string& format, const std::string& variant_name) {
    auto n = static_cast<SizeBudget>(size);
    UcVariant variant = UcVariant::Grammar;
    if (variant_name == "binder-count") variant = UcVariant::BinderCount;
    if (variant_name == "marker") variant = UcVariant::Marker;

    std::uint64_t count = 0;
    auto emit = [&](const std::string& text) {
        ++count;
        if (count_only) return;
        if (format == "csv") {
            std::cout << family << ',' << size << ',' << text << '\n';
        } else if (format == "json") {
            json row{{"family", family}, {"size", size}, {"object", text}};
            std::cout << row.dump() << '\n';
        } else {
            std::cout << text << '\n';
        }
    };
    if (!count_only && format == "csv") std::cout << "family,size,object\n";

    SkeletonSink skel_sink = [&](std::span<const SkelKind> s) {
        emit(to_string(s));
        return true;
    };
    if (family == "motzkin") {
        for_each_motzkin(n, skel_sink);
    } else if (family == "closable") {
        for_each_closable(n, skel_sink);
    } else if (family == "unclosable") {
        for_each_unclosable(n, skel_sink);
    } else if (family == "uniquely-closable") {
        for_each_uniquely_closable(n, skel_sink, variant);
    } else if (family == "uniquely-closable-typable") {
        for_each_uniquely_closable_typable(n, skel_sink);
    } else {  // closed-terms
        for_each_closed_term(n, [&](std::span<const TermNode> t) {
            emit(to_string(t));
            return true;
        });
    }
    if (count_only) std::cout << count << '\n';
    return 0;
}

// ---- sample --------------------------------------------------------------------

int run_sample(const SamplerConfig& cfg, std::uint64_t how_many, bool stats,
               const std::string& format) {
    UnitRng rng(cfg.seed);
    for (std::uint64_t i = 0; i < how_many; ++i) {
        auto start = std::chrono::steady_clock::now();
        auto result = sample(cfg, rng);
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (!result) {
            std::cerr << "sample: tries budget (" << cfg.tries_budget
                      << ") exhausted without an in-window skeleton\n";
            return 1;
        }
        if (format == "json") {
            json row{{"skeleton", to_string(result->skeleton)},
                     {"size", result->size},
                     {"attempts", result->attempts},
                     {"elapsed_ms", elapsed}};
            std::cout << row.dump() << '\n';
        } else {
            std::cout << to_string(result->skeleton) << '\n';
            if (stats) {
                json row{{"size", result->size},
                         {"attempts", result->attempts},
                         {"elapsed_ms", elapsed}};
                std::cout << row.dump() << '\n';
            }
        }
    }
    return 0;
}

// ---- classify ------------------------------------------------------------------

void classify_row(const MotzkinSkeleton& skel, const std::string& format) {
    bool closable = is_closable(skel);
    bool uc = is_uniquely_closable(skel);
    bool typable = is_typable_skel(skel);
    bool ut = is_uniquely_typable_skel(skel);
    std::string unique_type;
    if (uc) {
        auto t = skel_type(skel);
        unique_type = t ? to_string(*t) : "untypable";
    }
    if (format == "json") {
        json row{{"skeleton", to_string(skel)},     {"size", size(skel)},
                 {"closable", closable},            {"uniquely_closable", uc},
                 {"typable", typable},              {"uniquely_typable", ut},
                 {"unique_type", unique_type}};
        std::cout << row.dump() << '\n';
    } else {
        std::cout << to_string(skel) << ',' << size(skel) << ',' << (closable ? 1 : 0) << ','
                  << (uc ? 1 : 0) << ',' << (typable ? 1 : 0) << ',' << (ut ? 1 : 0) << ','
                  << unique_type << '\n';
    }
}

int run_classify(std::int64_t size_arg, const std::string& family,
                 const std::vector<std::string>& skeletons, const std::string& format) {
    if (format == "csv")
        std::cout << "skeleton,size,closable,uniquely_closable,typable,uniquely_typable,"
                     "unique_type\n";
    if (!skeletons.empty()) {
        for (const std::string& text : skeletons) classify_row(parse_skeleton(text), format);
        return 0;
    }
    auto sink = [&](std::span<const SkelKind> s) {
        classify_row(MotzkinSkeleton::from_preorder({s.begin(), s.end()}), format);
        return true;
    };
    auto n = static_cast<SizeBudget>(size_arg);
    if (family == "closable")
        for_each_closable(n, sink);
    else
        for_each_motzkin(n, sink);
    return 0;
}

// ---- bijection -----------------------------------------------------------------

int run_bijection(std::int64_t size_arg, const std::string& to_binary,
                  const std::string& from_binary, const std::string& format) {
    if (!to_binary.empty()) {
        std::cout << to_string(to_binary_tree(parse_skeleton(to_binary))) << '\n';
        return 0;
    }
    if (!from_binary.empty()) {
        std::cout << to_string(from_binary_tree(parse_binary_tree(from_binary))) << '\n';
        return 0;
    }
    if (format == "csv") std::cout << "skeleton,binary_tree\n";
    for_each_uniquely_closable_typable(
        static_cast<SizeBudget>(size_arg), [&](std::span<const SkelKind> s) {
            auto skel = MotzkinSkeleton::from_preorder({s.begin(), s.end()});
            auto btree = to_binary_tree(skel);
            if (format == "json") {
                json row{{"skeleton", to_string(skel)}, {"binary_tree", to_string(btree)}};
                std::cout << row.dump() << '\n';
            } else {
                std::cout << to_string(skel) << ',' << to_string(btree) << '\n';
            }
            return true;
        });
    return 0;
}

// ---- check ---------------------------------------------------------------------

struct SequenceCheck {
    std::string file;
    std::uint64_t default_cap;  // highest size checked unless overridden
    BigInt (*compute)(std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&);
};

// Enumeration-backed sequences get conservative caps; series-backed ones are
// checked across the whole shipped file.
const std::map<std::string, SequenceCheck>& check_registry() {
    static const std::map<std::string, SequenceCheck> reg = {
        {"motzkin",
         {"motzkin.txt", 1000,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return motzkin_coeffs(n + 1).at_size(n);
          }}},
        {"closed_terms",
         {"closed_terms.txt", 10,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return BigInt(count_closed_terms(static_cast<SizeBudget>(n)));
          }}},
        {"closable",
         {"closable.txt", 1000,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return closable_coeffs(n + 1).at_size(n);
          }}},
        {"unclosable",
         {"unclosable.txt", 1000,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return motzkin_coeffs(n + 1).at_size(n) - closable_coeffs(n + 1).at_size(n);
          }}},
        {"uniquely_closable",
         {"uniquely_closable.txt", 1000,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return uniquely_closable_coeffs(n + 1).at_size(n);
          }}},
        {"typable_skeletons",
         {"typable_skeletons.txt", 12,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>& cache) -> BigInt {
              return BigInt(classify_cache_get(cache, n).typable);
          }}},
        {"untypable_skeletons",
         {"untypable_skeletons.txt", 12,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>& cache) -> BigInt {
              return BigInt(classify_cache_get(cache, n).untypable_closable);
          }}},
        {"uniquely_typable",
         {"uniquely_typable.txt", 12,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>& cache) -> BigInt {
              return BigInt(classify_cache_get(cache, n).uniquely_typable);
          }}},
        {"uniquely_closable_typable",
         {"uniquely_closable_typable.txt", 22,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return BigInt(count_uniquely_closable_typable(static_cast<SizeBudget>(n)));
          }}},
        {"typable_closed_terms",
         {"typable_closed_terms.txt", 10,
          +[](std::uint64_t n, std::map<std::uint64_t, SkeletonClassCounts>&) -> BigInt {
              return BigInt(count_typable_closed_terms(static_cast<SizeBudget>(n)));
          }}},
    };
    return reg;
}

int run_check(const std::string& sequence, std::int64_t upto, const std::string& data_dir) {
    int failures = 0;
    std::map<std::uint64_t, SkeletonClassCounts> cache;
    for (const auto& [name, chk] : check_registry()) {
        if (!sequence.empty() && sequence != name) continue;
        GoldenSequence golden = load_golden_file(data_dir + "/" + chk.file);
        std::uint64_t cap = std::min<std::uint64_t>(golden.values.size() - 1, chk.default_cap);
        if (upto >= 0) cap = std::min<std::uint64_t>(golden.values.size() - 1,
                                                     static_cast<std::uint64_t>(upto));
        bool ok = true;
        for (std::uint64_t n = 0; n <= cap && ok; ++n) {
            BigInt got = chk.compute(n, cache);
            if (got != golden.values[n]) {
                std::cout << "check " << name << ": FAIL at size " << n << ": expected "
                          << golden.values[n].str() << ", got " << got.str() << '\n';
                ok = false;
                ++failures;
            }
        }
        if (ok) std::cout << "check " << name << ": PASS (sizes 0.." << cap << ")\n";
    }
    if (!sequence.empty() && check_registry().find(sequence) == check_registry().end()) {
        std::cerr << "check: unknown sequence '" << sequence << "'\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}

// ---- density -------------------------------------------------------------------

int run_density(std::int64_t upto) {
    std::cout << "size,closable,typable,ratio\n";
    auto closable = closable_coeffs(static_cast<std::size_t>(upto) + 1);
    std::map<std::uint64_t, SkeletonClassCounts> cache;
    for (std::int64_t n = 0; n <= upto; ++n) {
        BigInt c = closable.at_size(static_cast<std::size_t>(n));
        BigInt t = classify_cache_get(cache, static_cast<std::uint64_t>(n)).typable;
        char ratio[32] = "";
        if (c != 0)
            std::snprintf(ratio, sizeof ratio, "%.6f",
                          t.convert_to<double>() / c.convert_to<double>());
        std::cout << n << ',' << c.str() << ',' << t.str() << ',' << ratio << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motzkin-tree skeletons of lambda terms: enumeration, exact counting, "
                 "type classification, Boltzmann sampling and sequence checks"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "stream all objects of one size");
    std::string en_family = "motzkin";
    std::uint64_t en_size = 0;
    bool en_count_only = false;
    std::string en_format = "lines";
    std::string en_variant = "grammar";
    enumerate_cmd
        ->add_option("--family", en_family, "object family")
        ->transform(name_set({"motzkin", "closed-terms", "closable", "unclosable",
                              "uniquely-closable", "uniquely-closable-typable"}))
        ->required();
    enumerate_cmd->add_option("--size", en_size, "object size")->required();
    enumerate_cmd->add_flag("--count-only", en_count_only, "print only the number of objects");
    enumerate_cmd->add_option("--format", en_format, "output format")
        ->check(CLI::IsMember({"lines", "csv", "json"}));
    enumerate_cmd->add_option("--variant", en_variant, "uniquely-closable formulation")
        ->transform(name_set({"grammar", "binder-count", "marker"}));

    // count
    auto* count_cmd = app.add_subcommand("count", "exact counts by size or GF exponent");
    CountRequest creq;
    std::string co_format = "csv";
    std::int64_t co_size = -1, co_upto_size = -1, co_exp = -1, co_upto_exp = -1;
    creq.method = "auto";
    count_cmd->add_option("--family", creq.family, "count family")
        ->transform(name_set({"motzkin", "binary", "catalan", "closed-terms", "closable",
                              "unclosable", "uniquely-closable", "typable", "untypable",
                              "uniquely-typable", "uniquely-closable-typable",
                              "typable-closed-terms"}))
        ->required();
    auto* o1 = count_cmd->add_option("--size", co_size, "single size index");
    auto* o2 = count_cmd->add_option("--upto-size", co_upto_size, "all sizes 0..N");
    auto* o3 = count_cmd->add_option("--exponent", co_exp, "single GF exponent index");
    auto* o4 = count_cmd->add_option("--upto-exponent", co_upto_exp, "all exponents 0..N");
    o1->excludes(o2)->excludes(o3)->excludes(o4);
    o2->excludes(o3)->excludes(o4);
    o3->excludes(o4);
    count_cmd->add_option("--method", creq.method, "computation route")
        ->check(CLI::IsMember({"auto", "enumerate", "series", "recurrence", "direct"}));
    count_cmd->add_option("--format", co_format, "output format")
        ->check(CLI::IsMember({"csv", "bfile", "json"}));

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Boltzmann-sample random skeletons");
    SamplerConfig scfg;
    std::string sa_family = "closable";
    std::uint64_t sa_count = 1;
    bool sa_no_stats = false;
    std::string sa_format = "lines";
    scfg.seed = default_seed();
    sample_cmd->add_option("--family", sa_family, "sample family")
        ->transform(name_set({"closable", "uniquely-closable"}))
        ->required();
    sample_cmd->add_option("--min", scfg.min_size, "minimum accepted size")->required();
    sample_cmd->add_option("--max", scfg.max_size, "maximum accepted size")->required();
    sample_cmd->add_option("--seed", scfg.seed,
                           "RNG seed (default: LAMSKEL_SEED env var, else 0)");
    sample_cmd->add_option("--tries", scfg.tries_budget, "rejection budget per sample");
    sample_cmd->add_option("--count", sa_count, "number of samples to draw");
    sample_cmd->add_flag("--no-stats", sa_no_stats, "omit the JSON stats line");
    sample_cmd->add_option("--format", sa_format, "output format")
        ->check(CLI::IsMember({"lines", "json"}));

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "closability/typability classification of skeletons");
    std::int64_t cl_size = -1;
    std::string cl_family = "motzkin";
    std::vector<std::string> cl_skeletons;
    std::string cl_format = "csv";
    classify_cmd->add_option("--size", cl_size, "classify every skeleton of this size");
    classify_cmd->add_option("--family", cl_family, "family enumerated with --size")
        ->check(CLI::IsMember({"motzkin", "closable"}));
    classify_cmd->add_option("skeletons", cl_skeletons, "skeletons in canonical syntax");
    classify_cmd->add_option("--format", cl_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // bijection
    auto* bijection_cmd = app.add_subcommand(
        "bijection", "uniquely-closable-typable skeletons <-> binary trees");
    std::int64_t bi_size = -1;
    std::string bi_to, bi_from, bi_format = "csv";
    bijection_cmd->add_option("--size", bi_size, "list all pairs of this skeleton size");
    bijection_cmd->add_option("--to-binary", bi_to, "map one skeleton to its binary tree");
    bijection_cmd->add_option("--from-binary", bi_from, "map one binary tree to its skeleton");
    bijection_cmd->add_option("--format", bi_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // check
    auto* check_cmd =
        app.add_subcommand("check", "compare computed sequences against golden data files");
    std::string ch_sequence;
    std::int64_t ch_upto = -1;
    std::string ch_data_dir = default_data_dir();
    check_cmd->add_option("--sequence", ch_sequence, "check a single sequence (default: all)");
    check_cmd->add_option("--upto-size", ch_upto, "override the per-sequence size cap");
    check_cmd->add_option("--data-dir", ch_data_dir, "golden data directory");

    // density
    auto* density_cmd =
        app.add_subcommand("density", "closable vs typable skeleton counts and their ratio");
    std::int64_t de_upto = 12;
    density_cmd->add_option("--upto-size", de_upto, "last size reported");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate_cmd->parsed())
            return run_enumerate(en_family, en_size, en_count_only, en_format, en_variant);
        if (count_cmd->parsed()) {
            if (co_size >= 0) {
                creq.index_kind = "size";
                creq.from = creq.upto = static_cast<std::uint64_t>(co_size);
            } else if (co_upto_size >= 0) {
                creq.index_kind = "size";
                creq.upto = static_cast<std::uint64_t>(co_upto_size);
            } else if (co_exp >= 0) {
                creq.index_kind = "exponent";
                creq.from = creq.upto = static_cast<std::uint64_t>(co_exp);
            } else if (co_upto_exp >= 0) {
                creq.index_kind = "exponent";
                creq.upto = static_cast<std::uint64_t>(co_upto_exp);
            } else {
                std::cerr << "count: one of --size/--upto-size/--exponent/--upto-exponent "
                             "is required\n";
                return 2;
            }
            if (creq.family == "catalan") creq.index_kind = "k";
            return run_count(creq, co_format);
        }
        if (sample_cmd->parsed()) {
            scfg.family = sa_family == "closable" ? SampleFamily::Closable
                                                  : SampleFamily::UniquelyClosable;
            return run_sample(scfg, sa_count, !sa_no_stats, sa_format);
        }
        if (classify_cmd->parsed()) {
            if (cl_size < 0 && cl_skeletons.empty()) {
                std::cerr << "classify: provide --size or at least one skeleton\n";
                return 2;
            }
            return run_classify(cl_size, cl_family, cl_skeletons, cl_format);
        }
        if (bijection_cmd->parsed()) {
            if (bi_size < 0 && bi_to.empty() && bi_from.empty()) {
                std::cerr << "bijection: provide --size, --to-binary or --from-binary\n";
                return 2;
            }
            return run_bijection(bi_size, bi_to, bi_from, bi_format);
        }
        if (check_cmd->parsed()) return run_check(ch_sequence, ch_upto, ch_data_dir);
        if (density_cmd->parsed()) return run_density(de_upto);
    } catch (const std::exception& e) {
        std::cerr << "lamskel: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
