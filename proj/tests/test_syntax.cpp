#include <doctest.h>

#include <random>

#include "lamskel/sampler.hpp"
#include "lamskel/syntax.hpp"

using namespace lamskel;

TEST_CASE("printer emits the canonical syntax") {
    CHECK(to_string(parse_skeleton("v")) == "v");
    CHECK(to_string(parse_skeleton("l(v)")) == "l(v)");
    CHECK(to_string(parse_skeleton("a(l(l(a(v,v))),l(v))")) == "a(l(l(a(v,v))),l(v))");
    CHECK(to_string(parse_term("a(l(v(0)),l(v(12)))")) == "a(l(v(0)),l(v(12)))");
    CHECK(to_string(parse_binary_tree("a(a(v,v),v)")) == "a(a(v,v),v)");
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_skeleton(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_skeleton("a(v)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_skeleton("l()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_skeleton("a(v,v) "), std::invalid_argument);
    CHECK_THROWS_AS(parse_skeleton("b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_term("v"), std::invalid_argument);
    CHECK_THROWS_AS(parse_term("v()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_term("l(v(1x))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_binary_tree("l(v)"), std::invalid_argument);
}

TEST_CASE("round trip on sampled skeletons") {
    SamplerConfig cfg;
    cfg.family = SampleFamily::Closable;
    cfg.min_size = 0;
    cfg.max_size = 400;
    UnitRng rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto result = sample(cfg, rng);
        REQUIRE(result.has_value());
        std::string text = to_string(result->skeleton);
        CHECK(parse_skeleton(text) == result->skeleton);
    }
}

TEST_CASE("parser never crashes on junk, it throws") {
    std::mt19937 gen(7);
    const std::string alphabet = "vla(),0123456789 ";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    int parsed = 0;
    for (int i = 0; i < 5000; ++i) {
        std::string text;
        for (int j = len(gen); j > 0; --j) text += alphabet[pick(gen)];
        try {
            MotzkinSkeleton s = parse_skeleton(text);
            CHECK(to_string(s) == text);
            ++parsed;
        } catch (const std::invalid_argument&) {
        }
        try {
            DeBruijnTerm t = parse_term(text);
            CHECK(to_string(t) == text);
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(parsed > 0);  // the alphabet does produce some valid skeletons
}

TEST_CASE("round trip on a deep skeleton") {
    constexpr std::size_t depth = 100000;
    std::string text;
    for (std::size_t i = 0; i < depth; ++i) text += "a(l(v),";
    text += 'v';
    text.append(depth, ')');
    MotzkinSkeleton s = parse_skeleton(text);
    CHECK(to_string(s) == text);
    CHECK(size(s) == 3 * depth);
}
