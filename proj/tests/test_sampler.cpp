#include <doctest.h>

#include <map>

#include "lamskel/sampler.hpp"
#include "lamskel/syntax.hpp"

using namespace lamskel;

TEST_CASE("fixed seed reproduces identical output") {
    SamplerConfig cfg;
    cfg.family = SampleFamily::Closable;
    cfg.min_size = 5;
    cfg.max_size = 60;
    cfg.seed = 12345;
    auto a = sample(cfg);
    auto b = sample(cfg);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->skeleton == b->skeleton);
    CHECK(a->attempts == b->attempts);
    CHECK(a->size == b->size);
}

TEST_CASE("every accepted sample satisfies its family predicate and window") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SamplerConfig cfg;
        cfg.min_size = 3;
        cfg.max_size = 30;
        cfg.seed = seed;

        cfg.family = SampleFamily::Closable;
        auto c = sample(cfg);
        REQUIRE(c.has_value());
        CHECK(is_closable(c->skeleton));
        CHECK(size(c->skeleton) == c->size);
        CHECK(c->size >= cfg.min_size);
        CHECK(c->size <= cfg.max_size);

        cfg.family = SampleFamily::UniquelyClosable;
        auto u = sample(cfg);
        REQUIRE(u.has_value());
        CHECK(is_uniquely_closable(u->skeleton));
        CHECK(u->size >= cfg.min_size);
        CHECK(u->size <= cfg.max_size);
    }
}

TEST_CASE("rejections are reported as values") {
    SamplerConfig cfg;
    cfg.family = SampleFamily::UniquelyClosable;
    cfg.min_size = 30;
    cfg.max_size = 40;
    UnitRng rng(99);
    bool saw_underflow = false, saw_overflow = false;
    for (int i = 0; i < 3000 && !(saw_underflow && saw_overflow); ++i) {
        SampleAttempt a = sample_once(cfg, rng);
        if (a.status == SampleStatus::SizeUnderflow) {
            saw_underflow = true;
            CHECK(a.size < cfg.min_size);
            CHECK(size(a.skeleton) == a.size);
        }
        if (a.status == SampleStatus::SizeOverflow) {
            saw_overflow = true;
            CHECK(a.size <= cfg.max_size);
        }
    }
    CHECK(saw_underflow);
    CHECK(saw_overflow);
}

TEST_CASE("budget exhaustion is reported when the window is unreachable") {
    SamplerConfig cfg;
    cfg.family = SampleFamily::UniquelyClosable;
    cfg.min_size = 2;  // no uniquely closable skeleton has size 2
    cfg.max_size = 2;
    cfg.tries_budget = 200;
    cfg.seed = 7;
    CHECK_FALSE(sample(cfg).has_value());

    cfg.tries_budget = 0;
    CHECK_THROWS_AS(sample(cfg), std::invalid_argument);
}

TEST_CASE("a forced unary loop overflows the budget") {
    SamplerConfig cfg;
    cfg.family = SampleFamily::Closable;
    cfg.min_size = 0;
    cfg.max_size = 50;
    cfg.thresholds.closable_lambda = 2.0;  // always enter the Motzkin phase
    cfg.thresholds.motzkin_leaf = -1.0;    // never stop at a leaf
    cfg.thresholds.motzkin_unary = 2.0;    // always pick the unary constructor
    UnitRng rng(1);
    SampleAttempt a = sample_once(cfg, rng);
    CHECK(a.status == SampleStatus::SizeOverflow);
    CHECK(a.size == cfg.max_size);
}

TEST_CASE("samples of one hundred thousand nodes complete") {
    SamplerConfig cfg;
    cfg.family = SampleFamily::UniquelyClosable;
    cfg.min_size = 100000;
    cfg.max_size = 200000;
    cfg.seed = 3;
    auto result = sample(cfg);
    REQUIRE(result.has_value());
    CHECK(is_uniquely_closable(result->skeleton));
    CHECK(parse_skeleton(to_string(result->skeleton)) == result->skeleton);
    CHECK(leaf_count(result->skeleton) == binary_node_count(result->skeleton) + 1);
}

TEST_CASE("small-window samples are roughly uniform") {
    // size 5 hosts exactly two uniquely closable skeletons
    SamplerConfig cfg;
    cfg.family = SampleFamily::UniquelyClosable;
    cfg.min_size = 5;
    cfg.max_size = 5;
    cfg.seed = 2718;
    UnitRng rng(cfg.seed);
    std::map<std::string, int> freq;
    const int rounds = 4000;
    for (int i = 0; i < rounds; ++i) {
        auto result = sample(cfg, rng);
        REQUIRE(result.has_value());
        ++freq[to_string(result->skeleton)];
    }
    REQUIRE(freq.size() == 2);
    const double p = 0.5;
    const double sigma = std::sqrt(p * (1 - p) / rounds);
    for (const auto& [text, count] : freq)
        CHECK(std::abs(double(count) / rounds - p) < 3 * sigma);
}
