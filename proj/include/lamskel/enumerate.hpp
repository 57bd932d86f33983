#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lamskel/trees.hpp"

namespace lamskel {

// Exact-size streaming generators. Each family is emitted in a fixed
// canonical order: alternatives at a node are tried Leaf, Unary, Binary
// (variable indices ascending), and at a Binary node the left subtree
// budget ranges 0..n-2 ascending. The order is deterministic, so golden
// output files are byte-stable.
//
// Sinks receive a view of the generator's work buffer; the span is only
// valid for the duration of the call. Returning false stops the stream.
// Nothing is materialized unless the sink copies, so counting runs
// allocation-free.
using SkeletonSink = std::function<bool(std::span<const SkelKind>)>;
using TermSink = std::function<bool(std::span<const TermNode>)>;

// Size units threaded through generation; every emitted object consumes its
// budget exactly.
using SizeBudget = std::uint32_t;

// State used by the marker formulation of the uniquely-closable enumerator:
// below a lambda binder no further Unary node may appear.
enum class LambdaMarker : std::uint8_t { HasNoLambda, HasOneLambda };

// All Motzkin skeletons of the given size.
void for_each_motzkin(SizeBudget n, const SkeletonSink& sink);

// All closed de Bruijn terms of the given size.
void for_each_closed_term(SizeBudget n, const TermSink& sink);

// Closable skeletons, generated by the grammar
//   closable ::= l(motzkin) | a(closable, closable)
void for_each_closable(SizeBudget n, const SkeletonSink& sink);

// Complement of the closable family within the Motzkin family.
void for_each_unclosable(SizeBudget n, const SkeletonSink& sink);

// Three formulations of the uniquely-closable generator, kept behind one
// interface for differential testing. They emit identical streams.
//   BinderCount: leaf accepted iff exactly one binder is above it
//   Marker:      subtrees below a lambda are flagged and reject lambdas
//   Grammar:     uc ::= l(ca) | a(uc, uc);  ca ::= v | a(ca, ca)
enum class UcVariant { Grammar, BinderCount, Marker };
void for_each_uniquely_closable(SizeBudget n, const SkeletonSink& sink,
                                UcVariant variant = UcVariant::Grammar);

// Solution count of the uniquely-closable grammar obtained by running the
// generator without materializing skeletons; one counter tick per complete
// derivation.
std::uint64_t count_uniquely_closable_direct(SizeBudget n);

// Materializing wrappers.
std::vector<MotzkinSkeleton> enumerate_motzkin(SizeBudget n);
std::vector<DeBruijnTerm> enumerate_closed_terms(SizeBudget n);
std::vector<MotzkinSkeleton> enumerate_closable(SizeBudget n);
std::vector<MotzkinSkeleton> enumerate_unclosable(SizeBudget n);
std::vector<MotzkinSkeleton> enumerate_uniquely_closable(SizeBudget n,
                                                         UcVariant variant = UcVariant::Grammar);

// Counting wrappers (streaming, no materialization).
std::uint64_t count_motzkin(SizeBudget n);
std::uint64_t count_closed_terms(SizeBudget n);
std::uint64_t count_closable(SizeBudget n);
std::uint64_t count_unclosable(SizeBudget n);
std::uint64_t count_uniquely_closable(SizeBudget n, UcVariant variant = UcVariant::Grammar);

}  // namespace lamskel
