#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lamskel/trees.hpp"

namespace lamskel {

// Constructor-choice probabilities of the singularity-tuned Boltzmann
// samplers. Defaults are the published decimal constants read as binary64.
// Decisions compare a fresh uniform draw R against cumulative thresholds
// with R <= P; within the lambda-free phase of the uniquely closable
// sampler the leaf threshold equals the unary threshold of its parent
// grammar as printed.
struct SamplerThresholds {
    double closable_lambda = 0.8730398709632761;  // pick l over a at a closable node
    double motzkin_leaf = 0.3341408333975344;     // Motzkin phase: stop at a leaf
    double motzkin_unary = 0.667473848839429;     // ... else unary below this, binary above
    double uc_unary = 0.5001253328728457;         // pick l over a at a uniquely closable node
    double uc_leaf = 0.5001253328728457;          // lambda-free phase: leaf over binary
};

enum class SampleFamily : std::uint8_t { Closable, UniquelyClosable };

struct SamplerConfig {
    SampleFamily family = SampleFamily::Closable;
    std::uint64_t min_size = 0;
    std::uint64_t max_size = 0;
    std::uint64_t tries_budget = 100000;
    std::uint64_t seed = 0;
    SamplerThresholds thresholds{};
};

// Deterministic, portable uniform source: mt19937_64 mapped to [0,1) via the
// top 53 bits. Identical sequences on every platform for a given seed.
class UnitRng {
public:
    explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

enum class SampleStatus : std::uint8_t { Accepted, SizeOverflow, SizeUnderflow };

struct SampleAttempt {
    SampleStatus status;
    MotzkinSkeleton skeleton;  // meaningful unless status == SizeOverflow
    std::uint64_t size = 0;    // size reached (consumed budget on overflow)
};

// One top-down generation run. Budget starts at max_size and is decremented
// per SizePolicy costs; the run aborts with SizeOverflow the moment a
// constructor cannot be paid for, and reports SizeUnderflow when the
// completed tree is smaller than min_size. Both are expected rejection
// outcomes. Generation is iterative; accepted trees may have ~10^5 nodes.
SampleAttempt sample_once(const SamplerConfig& cfg, UnitRng& rng);

struct SampleResult {
    MotzkinSkeleton skeleton;
    std::uint64_t size = 0;
    std::uint64_t attempts = 0;  // 1-based index of the accepting attempt
};

// Repeats sample_once up to cfg.tries_budget times and returns the first
// in-window skeleton; nullopt when the budget is exhausted. The overload
// without an rng seeds a fresh UnitRng from cfg.seed, so (seed, cfg) fully
// determines the output.
std::optional<SampleResult> sample(const SamplerConfig& cfg, UnitRng& rng);
std::optional<SampleResult> sample(const SamplerConfig& cfg);

}  // namespace lamskel
