// Acceptance suite: one pass/fail line per criterion. Exit status equals the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lamskel/enumerate.hpp"
#include "lamskel/sampler.hpp"
#include "lamskel/series.hpp"
#include "lamskel/syntax.hpp"
#include "lamskel/typecheck.hpp"

using namespace lamskel;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Counter>
bool matches(Counter count, const std::vector<std::uint64_t>& expected, std::string& detail) {
    for (std::size_t n = 0; n < expected.size(); ++n) {
        std::uint64_t got = count(static_cast<SizeBudget>(n));
        if (got != expected[n]) {
            detail = "size " + std::to_string(n) + ": expected " +
                     std::to_string(expected[n]) + ", got " + std::to_string(got);
            return false;
        }
    }
    return true;
}

// 1. enumeration sequence regression, under ~2 minutes total
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = matches(count_closed_terms, {0, 1, 2, 4, 13, 42, 139, 506, 1915}, detail);
    if (ok)
        ok = matches(count_closable,
                     {0, 1, 1, 2, 5, 11, 26, 65, 163, 417, 1086, 2858, 7599, 20391, 55127},
                     detail);
    if (ok)
        ok = matches(count_unclosable,
                     {1, 0, 1, 2, 4, 10, 25, 62, 160, 418, 1102, 2940, 7912, 21444, 58507},
                     detail);
    double elapsed = seconds_since(start);
    if (ok && elapsed > 120.0) {
        ok = false;
        detail = "exceeded the 2 minute budget";
    }
    report(1, "enumerated closed-term/closable/unclosable counts (sizes 0-8, 0-14, 0-14)", ok,
           detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 2. closable + unclosable = Motzkin at every size <= 14
void criterion2() {
    auto m = motzkin_coeffs(15);
    std::string detail;
    bool ok = true;
    for (std::uint32_t s = 0; s <= 14 && ok; ++s) {
        BigInt sum = BigInt(count_closable(s)) + count_unclosable(s);
        if (sum != m.at_size(s)) {
            ok = false;
            detail = "size " + std::to_string(s);
        }
    }
    report(2, "closable + unclosable = Motzkin for sizes 0-14", ok, detail);
}

// 3. direct uniquely-closable counts up to size 30 in under a minute
void criterion3() {
    const std::vector<std::uint64_t> expected = {
        0,    1,    0,    1,     1,     2,     2,      7,      5,      20,     19,
        60,   62,   202,  202,   679,   711,   2304,   2507,   8046,   8856,   28434,
        31855, 101288, 115596, 364710, 421654, 1323946, 1549090, 4836072, 5724582};
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = matches(count_uniquely_closable_direct, expected, detail);
    double elapsed = seconds_since(start);
    if (ok && elapsed > 60.0) {
        ok = false;
        detail = "exceeded the 60 second budget";
    }
    report(3, "count_uniquely_closable_direct matches sizes 0-30 in under 60s", ok,
           detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 4. recurrences equal the convolution oracles through exponent 200, under 5s
void criterion4() {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        auto c_oracle = closable_coeffs(200);
        auto u_oracle = uniquely_closable_coeffs(200);
        auto c_rec = recurrence_advance(closable_recurrence(), 200);
        auto u_rec = recurrence_advance(uniquely_closable_recurrence(), 200);
        for (std::size_t e = 0; e <= 200 && ok; ++e) {
            if (c_rec.at_exponent(e) != c_oracle.at_exponent(e) ||
                u_rec.at_exponent(e) != u_oracle.at_exponent(e)) {
                ok = false;
                detail = "exponent " + std::to_string(e);
            }
        }
        if (ok && (c_rec.at_exponent(13) != 7599 || c_rec.at_exponent(15) != 55127 ||
                   u_rec.at_exponent(8) != 7)) {
            ok = false;
            detail = "spot values c_13/c_15/u_8";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed > 5.0) {
        ok = false;
        detail = "exceeded the 5 second budget";
    }
    report(4, "P-recurrences equal convolution oracles to exponent 200", ok,
           detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 5. typability regression, ~5 minute budget
void criterion5() {
    const std::vector<std::uint64_t> typable = {0, 1, 1, 1, 5, 9, 17, 55, 122, 289, 828, 2037,
                                                5239};
    const std::vector<std::uint64_t> untypable = {0, 0, 0, 1, 0, 2, 9, 10, 41, 128, 258, 821,
                                                  2360};
    const std::vector<std::uint64_t> uniquely = {0, 1, 0, 0, 2, 0, 1, 7, 1, 13, 34, 20, 100};
    const std::vector<std::uint64_t> typed_terms = {0, 1, 2, 3, 10, 34, 98, 339};

    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    for (std::uint32_t n = 0; n <= 12 && ok; ++n) {
        SkeletonClassCounts counts = classify_skeletons(n);
        if (counts.typable != typable[n] || counts.untypable_closable != untypable[n] ||
            counts.uniquely_typable != uniquely[n]) {
            ok = false;
            detail = "skeleton classification at size " + std::to_string(n);
        }
    }
    if (ok) ok = matches(count_typable_closed_terms, typed_terms, detail);
    double elapsed = seconds_since(start);
    if (ok && elapsed > 300.0) {
        ok = false;
        detail = "exceeded the 5 minute budget";
    }
    report(5, "typable/untypable/uniquely-typable skeletons (0-12) and typable closed terms "
              "(0-7)",
           ok, detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 6. Catalan bijection
void criterion6() {
    std::string detail;
    bool ok = true;
    // sizes 3k+1 with k <= 7 are exactly the sizes 1,4,...,22
    for (std::uint32_t n = 0; n <= 22 && ok; ++n) {
        BigInt count = count_uniquely_closable_typable(n);
        BigInt expected = n % 3 == 1 ? catalan(n / 3) : 0;
        if (count != expected) {
            ok = false;
            detail = "size " + std::to_string(n);
        }
    }
    // round trip over every binary tree with at most 6 internal nodes
    if (ok) {
        std::vector<BinaryTree> layer{BinaryTree::leaf()};
        std::vector<std::vector<BinaryTree>> by_nodes{layer};
        for (std::size_t k = 1; k <= 6 && ok; ++k) {
            std::vector<BinaryTree> next;
            for (std::size_t i = 0; i < k; ++i)
                for (const auto& l : by_nodes[i])
                    for (const auto& r : by_nodes[k - 1 - i])
                        next.push_back(BinaryTree::node(l, r));
            by_nodes.push_back(next);
        }
        std::size_t checked = 0;
        for (const auto& trees : by_nodes)
            for (const auto& b : trees) {
                ++checked;
                if (to_binary_tree(from_binary_tree(b)) != b) {
                    ok = false;
                    detail = "round trip failed for " + to_string(b);
                }
            }
        if (ok && checked != 1 + 1 + 2 + 5 + 14 + 42 + 132) {
            ok = false;
            detail = "unexpected number of binary trees";
        }
    }
    report(6, "uniquely-closable-typable counts are Catalan at sizes 3k+1 (k<=7), zero "
              "elsewhere <=22; bijection round-trips",
           ok, detail);
}

// 7. uniqueness theorem: typable uniquely closable skeletons are uniquely
// typable; skel_type agrees with inference on the unique term
void criterion7() {
    std::string detail;
    bool ok = true;
    for (std::uint32_t n = 0; n <= 13 && ok; ++n) {
        for_each_uniquely_closable(n, [&](std::span<const SkelKind> s) {
            MotzkinSkeleton skel = MotzkinSkeleton::from_preorder({s.begin(), s.end()});
            auto by_skel = skel_type(skel);
            if (is_typable_skel(skel) != by_skel.has_value() ||
                (by_skel && !is_uniquely_typable_skel(skel))) {
                ok = false;
                detail = "typability mismatch on " + to_string(skel);
                return false;
            }
            auto by_term = infer_type(close_unique(skel));
            bool agree = by_skel ? (by_term.status == InferStatus::Typed &&
                                    *by_term.type == *by_skel)
                                 : by_term.status == InferStatus::Untypable;
            if (!agree) {
                ok = false;
                detail = "skel_type/infer_type disagree on " + to_string(skel);
                return false;
            }
            return true;
        });
    }
    report(7, "for uniquely closable skeletons <=13: typable => uniquely typable, and "
              "skel_type == infer_type(close_unique)",
           ok, detail);
}

// 8. samplers: big window within 60s each; determinism; small-window uniformity
void criterion8() {
    std::string detail;
    bool ok = true;

    for (SampleFamily family : {SampleFamily::Closable, SampleFamily::UniquelyClosable}) {
        SamplerConfig cfg;
        cfg.family = family;
        cfg.min_size = 100000;
        cfg.max_size = 200000;
        cfg.seed = 20170705;
        auto start = std::chrono::steady_clock::now();
        auto first = sample(cfg);
        double elapsed = seconds_since(start);
        auto second = sample(cfg);
        const char* name = family == SampleFamily::Closable ? "closable" : "uniquely closable";
        if (!first || !second) {
            ok = false;
            detail = std::string(name) + ": budget exhausted";
            break;
        }
        if (elapsed > 60.0) {
            ok = false;
            detail = std::string(name) + ": exceeded 60s";
            break;
        }
        bool predicate = family == SampleFamily::Closable ? is_closable(first->skeleton)
                                                          : is_uniquely_closable(first->skeleton);
        if (!predicate || first->size < cfg.min_size || first->size > cfg.max_size) {
            ok = false;
            detail = std::string(name) + ": predicate or window violated";
            break;
        }
        if (!(first->skeleton == second->skeleton && first->attempts == second->attempts)) {
            ok = false;
            detail = std::string(name) + ": fixed seed not reproducible";
            break;
        }
    }

    if (ok) {
        // uniformity: the 7 uniquely closable skeletons of size 7
        SamplerConfig cfg;
        cfg.family = SampleFamily::UniquelyClosable;
        cfg.min_size = 7;
        cfg.max_size = 7;
        cfg.seed = 424243;
        UnitRng rng(cfg.seed);
        std::map<std::string, std::uint64_t> freq;
        const std::uint64_t accepted_total = 70000;
        for (std::uint64_t i = 0; i < accepted_total; ++i) {
            auto result = sample(cfg, rng);
            if (!result) {
                ok = false;
                detail = "uniformity run: budget exhausted";
                break;
            }
            ++freq[to_string(result->skeleton)];
        }
        if (ok && freq.size() != 7) {
            ok = false;
            detail = "expected 7 distinct size-7 skeletons, saw " +
                     std::to_string(freq.size());
        }
        if (ok) {
            const double p = 1.0 / 7.0;
            const double sigma = std::sqrt(p * (1.0 - p) / double(accepted_total));
            for (const auto& [text, count] : freq) {
                double dev = std::abs(double(count) / double(accepted_total) - p);
                if (dev > 3.0 * sigma) {
                    ok = false;
                    detail = text + " deviates " + std::to_string(dev) + " (> 3 sigma = " +
                             std::to_string(3.0 * sigma) + ")";
                    break;
                }
            }
        }
    }
    report(8, "samplers hit the 100k-200k window in time, reproduce under a fixed seed, and "
              "are uniform on size-7 uniquely closable skeletons",
           ok, detail);
}

// 9. asymptotics: convergence direction toward 1/sqrt(5); estimate within 10%
void criterion9() {
    auto m = motzkin_coeffs(200);
    auto c = closable_coeffs(200);
    const double limit = 1.0 / std::sqrt(5.0);
    auto ratio_at = [&](std::size_t e) {
        return c.at_exponent(e).convert_to<double>() / m.at_exponent(e).convert_to<double>();
    };
    bool ok = std::abs(ratio_at(200) - limit) < std::abs(ratio_at(50) - limit);
    std::string detail;
    if (!ok) detail = "ratio deviation did not shrink from exponent 50 to 200";
    if (ok) {
        double estimate = asymptotic_estimate(AsymptoticFamily::Closable, 200);
        double rel = estimate / c.at_exponent(200).convert_to<double>();
        if (!(rel > 0.9 && rel < 1.1)) {
            ok = false;
            detail = "estimate/exact at exponent 200 = " + std::to_string(rel);
        }
    }
    report(9, "closable/motzkin ratio approaches 1/sqrt(5); asymptotic estimate within 10% at "
              "exponent 200",
           ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
