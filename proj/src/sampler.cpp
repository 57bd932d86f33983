#include "lamskel/sampler.hpp"

#include <stdexcept>
#include <vector>

namespace lamskel {

namespace {

// Grammar phases of the two samplers. Closable: CL ::= l(MOT) | a(CL,CL),
// MOT free Motzkin. Uniquely closable: UC ::= l(CA) | a(UC,UC), CA
// lambda-free binary.
enum class Phase : std::uint8_t { Closable, Motzkin, UniquelyClosable, ClosedAbove };

struct PendingNode {
    Phase phase;
    double r;  // decision draw, produced by the parent before descending
};

}  // namespace

SampleAttempt sample_once(const SamplerConfig& cfg, UnitRng& rng) {
    const SamplerThresholds& th = cfg.thresholds;
    std::uint64_t remaining = cfg.max_size;
    std::vector<SkelKind> buf;
    std::vector<PendingNode> work;

    const Phase root =
        cfg.family == SampleFamily::Closable ? Phase::Closable : Phase::UniquelyClosable;
    work.push_back({root, rng.next()});

    auto consume = [&remaining](std::uint64_t cost) {
        if (remaining < cost) return false;
        remaining -= cost;
        return true;
    };

    while (!work.empty()) {
        PendingNode node = work.back();
        work.pop_back();

        // Children's decision draws happen at the parent, in left-right
        // order; the right child's pending entry is pushed first so the left
        // child is generated first.
        switch (node.phase) {
            case Phase::Closable: {
                if (node.r <= th.closable_lambda) {
                    if (!consume(SizePolicy::lambda_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Unary);
                    work.push_back({Phase::Motzkin, rng.next()});
                } else {
                    if (!consume(SizePolicy::application_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Binary);
                    double r1 = rng.next();
                    double r2 = rng.next();
                    work.push_back({Phase::Closable, r2});
                    work.push_back({Phase::Closable, r1});
                }
                break;
            }
            case Phase::Motzkin: {
                if (node.r <= th.motzkin_leaf) {
                    buf.push_back(SkelKind::Leaf);
                } else if (node.r <= th.motzkin_unary) {
                    if (!consume(SizePolicy::lambda_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Unary);
                    work.push_back({Phase::Motzkin, rng.next()});
                } else {
                    if (!consume(SizePolicy::application_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Binary);
                    double r1 = rng.next();
                    double r2 = rng.next();
                    work.push_back({Phase::Motzkin, r2});
                    work.push_back({Phase::Motzkin, r1});
                }
                break;
            }
            case Phase::UniquelyClosable: {
                if (node.r <= th.uc_unary) {
                    if (!consume(SizePolicy::lambda_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Unary);
                    work.push_back({Phase::ClosedAbove, rng.next()});
                } else {
                    if (!consume(SizePolicy::application_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Binary);
                    double r1 = rng.next();
                    double r2 = rng.next();
                    work.push_back({Phase::UniquelyClosable, r2});
                    work.push_back({Phase::UniquelyClosable, r1});
                }
                break;
            }
            case Phase::ClosedAbove: {
                if (node.r <= th.uc_leaf) {
                    buf.push_back(SkelKind::Leaf);
                } else {
                    if (!consume(SizePolicy::application_cost))
                        return {SampleStatus::SizeOverflow, MotzkinSkeleton(),
                                cfg.max_size - remaining};
                    buf.push_back(SkelKind::Binary);
                    double r1 = rng.next();
                    double r2 = rng.next();
                    work.push_back({Phase::ClosedAbove, r2});
                    work.push_back({Phase::ClosedAbove, r1});
                }
                break;
            }
        }
    }

    const std::uint64_t tree_size = cfg.max_size - remaining;
    MotzkinSkeleton skel = MotzkinSkeleton::from_preorder(std::move(buf));
    if (tree_size < cfg.min_size) return {SampleStatus::SizeUnderflow, std::move(skel), tree_size};
    return {SampleStatus::Accepted, std::move(skel), tree_size};
}

std::optional<SampleResult> sample(const SamplerConfig& cfg, UnitRng& rng) {
    if (cfg.tries_budget == 0)
        throw std::invalid_argument("sample: tries_budget must be at least 1");
    if (cfg.min_size > cfg.max_size)
        throw std::invalid_argument("sample: min_size exceeds max_size");
    for (std::uint64_t attempt = 1; attempt <= cfg.tries_budget; ++attempt) {
        SampleAttempt a = sample_once(cfg, rng);
        if (a.status == SampleStatus::Accepted)
            return SampleResult{std::move(a.skeleton), a.size, attempt};
    }
    return std::nullopt;
}

std::optional<SampleResult> sample(const SamplerConfig& cfg) {
    UnitRng rng(cfg.seed);
    return sample(cfg, rng);
}

}  // namespace lamskel
