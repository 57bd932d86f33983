#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace lamskel {

// Size weights shared by every tree family in this library: a lambda binder
// costs 1, an application costs 2, a variable/leaf costs 0. Generating-function
// tables count the same objects at exponent size+1 (gf_offset).
struct SizePolicy {
    static constexpr std::uint64_t lambda_cost = 1;
    static constexpr std::uint64_t application_cost = 2;
    static constexpr std::uint64_t variable_cost = 0;
    static constexpr std::uint64_t gf_offset = 1;
};

enum class SkelKind : std::uint8_t { Leaf = 0, Unary = 1, Binary = 2 };

enum class TermKind : std::uint8_t { Var = 0, Lam = 1, App = 2 };

struct TermNode {
    TermKind kind;
    std::uint32_t index = 0;  // de Bruijn index, meaningful for Var only
    bool operator==(const TermNode&) const = default;
};

enum class BinKind : std::uint8_t { Leaf = 0, Node = 1 };

// Trees are stored flat in preorder. This keeps values cheap to copy and
// compare, and lets every traversal (including destruction) run without
// call-stack recursion; Boltzmann samples reach depths above 10^5 where
// node-per-allocation representations blow the stack.
class MotzkinSkeleton {
public:
    MotzkinSkeleton() = default;  // a single leaf

    static MotzkinSkeleton leaf();
    static MotzkinSkeleton unary(const MotzkinSkeleton& child);
    static MotzkinSkeleton binary(const MotzkinSkeleton& left, const MotzkinSkeleton& right);
    // Validates that `tags` encodes exactly one tree.
    static MotzkinSkeleton from_preorder(std::vector<SkelKind> tags);

    std::span<const SkelKind> preorder() const { return pre_; }
    std::size_t node_count() const { return pre_.size(); }

    bool operator==(const MotzkinSkeleton&) const = default;

private:
    struct Unchecked {};
    MotzkinSkeleton(std::vector<SkelKind> tags, Unchecked) : pre_(std::move(tags)) {}
    std::vector<SkelKind> pre_{SkelKind::Leaf};
};

class DeBruijnTerm {
public:
    DeBruijnTerm() = default;  // v(0)

    static DeBruijnTerm var(std::uint32_t index);
    static DeBruijnTerm lam(const DeBruijnTerm& body);
    static DeBruijnTerm app(const DeBruijnTerm& fun, const DeBruijnTerm& arg);
    static DeBruijnTerm from_preorder(std::vector<TermNode> nodes);

    std::span<const TermNode> preorder() const { return pre_; }
    std::size_t node_count() const { return pre_.size(); }

    bool operator==(const DeBruijnTerm&) const = default;

private:
    struct Unchecked {};
    DeBruijnTerm(std::vector<TermNode> nodes, Unchecked) : pre_(std::move(nodes)) {}
    std::vector<TermNode> pre_{TermNode{TermKind::Var, 0}};
};

class BinaryTree {
public:
    BinaryTree() = default;  // a single leaf

    static BinaryTree leaf();
    static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
    static BinaryTree from_preorder(std::vector<BinKind> tags);

    std::span<const BinKind> preorder() const { return pre_; }
    std::size_t internal_node_count() const;

    bool operator==(const BinaryTree&) const = default;

private:
    struct Unchecked {};
    BinaryTree(std::vector<BinKind> tags, Unchecked) : pre_(std::move(tags)) {}
    std::vector<BinKind> pre_{BinKind::Leaf};
};

// Weighted size per SizePolicy. Span overloads operate on raw preorder
// buffers; the enumerators use them to avoid materializing trees.
std::uint64_t size(std::span<const SkelKind> skel);
std::uint64_t size(std::span<const TermNode> term);
inline std::uint64_t size(const MotzkinSkeleton& s) { return size(s.preorder()); }
inline std::uint64_t size(const DeBruijnTerm& t) { return size(t.preorder()); }

std::uint64_t leaf_count(std::span<const SkelKind> skel);
std::uint64_t binary_node_count(std::span<const SkelKind> skel);
inline std::uint64_t leaf_count(const MotzkinSkeleton& s) { return leaf_count(s.preorder()); }
inline std::uint64_t binary_node_count(const MotzkinSkeleton& s) {
    return binary_node_count(s.preorder());
}

// Index erasure: Var -> Leaf, Lam -> Unary, App -> Binary.
MotzkinSkeleton to_skeleton(const DeBruijnTerm& term);

// True iff every Var(i) sits under more than i lambda binders.
bool is_closed(std::span<const TermNode> term);
inline bool is_closed(const DeBruijnTerm& t) { return is_closed(t.preorder()); }

// True iff every root-to-leaf path passes through at least one Unary node,
// i.e. the skeleton hosts at least one closed labeling.
bool is_closable(std::span<const SkelKind> skel);
inline bool is_closable(const MotzkinSkeleton& s) { return is_closable(s.preorder()); }

// True iff every root-to-leaf path passes through exactly one Unary node;
// such a skeleton hosts exactly one closed labeling (all indices 0).
bool is_uniquely_closable(std::span<const SkelKind> skel);
inline bool is_uniquely_closable(const MotzkinSkeleton& s) {
    return is_uniquely_closable(s.preorder());
}

// The unique closed labeling of a uniquely closable skeleton.
// Throws std::invalid_argument when the skeleton is not uniquely closable.
DeBruijnTerm close_unique(const MotzkinSkeleton& skel);

}  // namespace lamskel
