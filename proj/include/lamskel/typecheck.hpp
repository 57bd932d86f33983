#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamskel/enumerate.hpp"
#include "lamskel/trees.hpp"
#include "lamskel/types.hpp"

namespace lamskel {

enum class InferStatus : std::uint8_t { Typed, Untypable, OpenTerm };

struct InferResult {
    InferStatus status;
    std::optional<SimpleType> type;  // set iff status == Typed, canonically renumbered
};

// Principal simple type of a closed term. Open terms are reported as
// OpenTerm, distinct from Untypable.
InferResult infer_type(const DeBruijnTerm& term);

// One constraint of a skeleton's typing program. Variable ids are shared
// across the whole ConstraintSet.
struct Constraint {
    enum class Kind : std::uint8_t { Unify, Elem };
    Kind kind;
    SimpleType lhs;                // Elem: the leaf's type; Unify: left side
    SimpleType rhs;                // Unify only
    std::vector<SimpleType> env;   // Elem only; innermost binder first
    std::size_t leaf_ordinal = 0;  // Elem only; leaves numbered left to right
};

// Typing program of a skeleton: one Elem constraint per leaf, in leaf order.
// A solution picks an environment entry per leaf (the picks are exactly the
// de Bruijn indices) such that all equations unify under the occurs check.
// An Elem constraint with an empty environment encodes a closedness
// violation and makes the set unsatisfiable.
struct ConstraintSet {
    MotzkinSkeleton skeleton;
    SimpleType root_type;
    std::vector<Constraint> constraints;
    bool closedness_ok = true;  // true iff every Elem environment is non-empty
};

ConstraintSet build_constraints(const MotzkinSkeleton& skel);

struct TypedSolution {
    DeBruijnTerm term;
    SimpleType type;  // canonically renumbered
};

// First `limit` solutions in canonical choice order: leaves left to right,
// environment indices ascending. Complete when fewer exist.
std::vector<TypedSolution> solve_upto(const ConstraintSet& set, std::size_t limit);
std::size_t count_solutions_upto(const ConstraintSet& set, std::size_t limit);

bool is_typable_skel(const MotzkinSkeleton& skel);
bool is_untypable_closable_skel(const MotzkinSkeleton& skel);
bool is_uniquely_typable_skel(const MotzkinSkeleton& skel);

// Type of the unique closed term hosted by a uniquely closable skeleton,
// or nullopt when that term is untypable. Agrees with
// infer_type(close_unique(skel)). Throws std::invalid_argument when the
// skeleton is not uniquely closable.
std::optional<SimpleType> skel_type(const MotzkinSkeleton& skel);

// Uniquely closable skeletons whose unique term is typable.
void for_each_uniquely_closable_typable(SizeBudget n, const SkeletonSink& sink);
std::vector<MotzkinSkeleton> enumerate_uniquely_closable_typable(SizeBudget n);
std::uint64_t count_uniquely_closable_typable(SizeBudget n);

// Number of simply-typable closed terms of the given size, computed by
// summing solution counts over closable skeletons.
std::uint64_t count_typable_closed_terms(SizeBudget n);

// One enumeration pass over the closable skeletons of size n, bucketing them
// by solution count (0, exactly 1, more than 1).
struct SkeletonClassCounts {
    std::uint64_t typable = 0;             // at least one solution
    std::uint64_t untypable_closable = 0;  // closable but no solution
    std::uint64_t uniquely_typable = 0;    // exactly one solution
};
SkeletonClassCounts classify_skeletons(SizeBudget n);

// Bijection between uniquely-closable-typable skeletons (every terminal
// subtree is l(v)) and binary trees: l(v) <-> leaf, a/2 <-> internal node.
// A skeleton of size 3n+1 maps to a binary tree with n internal nodes.
// to_binary_tree throws std::invalid_argument when the skeleton is not of
// that shape (in particular when some Unary child is not a Leaf).
BinaryTree to_binary_tree(const MotzkinSkeleton& skel);
MotzkinSkeleton from_binary_tree(const BinaryTree& tree);

}  // namespace lamskel
