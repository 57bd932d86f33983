#include "lamskel/typecheck.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "type_store.hpp"

namespace lamskel {

namespace {

using detail::TypeStore;
using Ref = TypeStore::Ref;

// Top-down typing walk shared by infer_type and the constraint builder:
// every node receives the type it must have. A Lam forces an arrow shape,
// an App introduces a fresh argument type, and the pending stack carries
// the expected type of each upcoming right sibling.
struct PendingRight {
    Ref expected;
    std::size_t binder_depth;
};

}  // namespace

InferResult infer_type(const DeBruijnTerm& term) {
    if (!is_closed(term)) return {InferStatus::OpenTerm, std::nullopt};

    TypeStore store;
    Ref root = store.fresh_var();
    std::vector<Ref> binders;
    std::vector<PendingRight> pending;
    Ref expected = root;

    for (const TermNode& node : term.preorder()) {
        switch (node.kind) {
            case TermKind::Lam: {
                auto [dom, cod] = store.ensure_arrow(expected);
                binders.push_back(dom);
                expected = cod;
                continue;
            }
            case TermKind::App: {
                Ref arg = store.fresh_var();
                pending.push_back({arg, binders.size()});
                expected = store.arrow(arg, expected);
                continue;
            }
            case TermKind::Var: {
                Ref bound = binders[binders.size() - 1 - node.index];
                if (!store.unify(expected, bound)) return {InferStatus::Untypable, std::nullopt};
                if (!pending.empty()) {
                    binders.resize(pending.back().binder_depth);
                    expected = pending.back().expected;
                    pending.pop_back();
                }
                continue;
            }
        }
    }
    return {InferStatus::Typed, canonicalize(store.extract(root))};
}

// ---- constraint programs -----------------------------------------------------

ConstraintSet build_constraints(const MotzkinSkeleton& skel) {
    TypeStore store;
    Ref root = store.fresh_var();
    std::vector<Ref> binders;
    std::vector<PendingRight> pending;
    Ref expected = root;

    struct LeafRecord {
        Ref expected;
        std::vector<Ref> env;  // innermost first
    };
    std::vector<LeafRecord> leaves;

    for (SkelKind kind : skel.preorder()) {
        switch (kind) {
            case SkelKind::Unary: {
                auto [dom, cod] = store.ensure_arrow(expected);
                binders.push_back(dom);
                expected = cod;
                continue;
            }
            case SkelKind::Binary: {
                Ref arg = store.fresh_var();
                pending.push_back({arg, binders.size()});
                expected = store.arrow(arg, expected);
                continue;
            }
            case SkelKind::Leaf: {
                LeafRecord rec;
                rec.expected = expected;
                rec.env.assign(binders.rbegin(), binders.rend());
                leaves.push_back(std::move(rec));
                if (!pending.empty()) {
                    binders.resize(pending.back().binder_depth);
                    expected = pending.back().expected;
                    pending.pop_back();
                }
                continue;
            }
        }
    }

    ConstraintSet set;
    set.skeleton = skel;
    set.root_type = store.extract(root);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        Constraint c;
        c.kind = Constraint::Kind::Elem;
        c.lhs = store.extract(leaves[i].expected);
        for (Ref v : leaves[i].env) c.env.push_back(store.extract(v));
        c.leaf_ordinal = i;
        if (c.env.empty()) set.closedness_ok = false;
        set.constraints.push_back(std::move(c));
    }
    return set;
}

namespace {

// Backtracking search over the constraint list. Elem constraints are choice
// points (environment index ascending); Unify constraints have a single
// alternative. Runs iteratively so choice depth never touches the call stack.

Ref load_value_type(TypeStore& store, std::unordered_map<std::uint32_t, Ref>& vmap,
                    const SimpleType& type) {
    auto nodes = type.preorder();
    std::vector<Ref> stack;
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const TypeNodeV& n = nodes[i];
        if (n.kind == TypeKind::Var) {
            auto [it, inserted] = vmap.try_emplace(n.var, -1);
            if (inserted) it->second = store.fresh_var();
            stack.push_back(it->second);
        } else {
            Ref dom = stack.back();
            stack.pop_back();
            Ref cod = stack.back();
            stack.pop_back();
            stack.push_back(store.arrow(dom, cod));
        }
    }
    return stack.back();
}

struct ChoicePoint {
    std::size_t constraint;
    std::size_t next_alt;
    std::size_t trail_mark;
};

// Runs fn(term_indices, root_ref, store) once per solution, in canonical
// order, until fn returns false or the search space is exhausted.
template <typename Fn>
void solve_constraints(const ConstraintSet& set, Fn fn) {
    if (!set.closedness_ok) return;

    TypeStore store;
    std::unordered_map<std::uint32_t, Ref> vmap;
    Ref root = load_value_type(store, vmap, set.root_type);

    struct LoadedConstraint {
        Constraint::Kind kind;
        Ref lhs;
        Ref rhs = -1;
        std::vector<Ref> env;
    };
    std::vector<LoadedConstraint> cs;
    cs.reserve(set.constraints.size());
    for (const Constraint& c : set.constraints) {
        LoadedConstraint lc;
        lc.kind = c.kind;
        lc.lhs = load_value_type(store, vmap, c.lhs);
        if (c.kind == Constraint::Kind::Unify) lc.rhs = load_value_type(store, vmap, c.rhs);
        for (const SimpleType& e : c.env) lc.env.push_back(load_value_type(store, vmap, e));
        cs.push_back(std::move(lc));
    }

    std::vector<ChoicePoint> choices;
    std::vector<std::uint32_t> picks(cs.size(), 0);  // Elem picks by constraint position
    std::size_t i = 0;
    bool advancing = true;

    while (true) {
        if (advancing && i == cs.size()) {
            if (!fn(picks, root, store)) return;
            advancing = false;  // backtrack for the next solution
        }
        if (advancing) {
            choices.push_back({i, 0, store.mark()});
            advancing = false;
        }
        // resume the top choice point
        if (choices.empty()) return;
        ChoicePoint& cp = choices.back();
        const LoadedConstraint& c = cs[cp.constraint];
        std::size_t alternatives = c.kind == Constraint::Kind::Elem ? c.env.size() : 1;
        bool moved = false;
        while (cp.next_alt < alternatives) {
            std::size_t alt = cp.next_alt++;
            store.rollback(cp.trail_mark);
            bool ok = c.kind == Constraint::Kind::Elem ? store.unify(c.lhs, c.env[alt])
                                                       : store.unify(c.lhs, c.rhs);
            if (ok) {
                if (c.kind == Constraint::Kind::Elem)
                    picks[cp.constraint] = static_cast<std::uint32_t>(alt);
                i = cp.constraint + 1;
                advancing = true;
                moved = true;
                break;
            }
        }
        if (!moved) {
            store.rollback(cp.trail_mark);
            choices.pop_back();
        }
    }
}

DeBruijnTerm label_skeleton(const MotzkinSkeleton& skel, const std::vector<std::uint32_t>& picks,
                            const std::vector<std::size_t>& leaf_for_constraint) {
    std::vector<TermNode> nodes;
    nodes.reserve(skel.node_count());
    std::size_t leaf = 0;
    for (SkelKind k : skel.preorder()) {
        switch (k) {
            case SkelKind::Leaf:
                nodes.push_back(TermNode{TermKind::Var, picks[leaf_for_constraint[leaf]]});
                ++leaf;
                break;
            case SkelKind::Unary: nodes.push_back(TermNode{TermKind::Lam, 0}); break;
            case SkelKind::Binary: nodes.push_back(TermNode{TermKind::App, 0}); break;
        }
    }
    return DeBruijnTerm::from_preorder(std::move(nodes));
}

// constraint position holding the Elem of each leaf ordinal
std::vector<std::size_t> leaf_constraint_index(const ConstraintSet& set) {
    std::size_t leaves = 0;
    for (const Constraint& c : set.constraints)
        if (c.kind == Constraint::Kind::Elem) ++leaves;
    std::vector<std::size_t> idx(leaves, 0);
    for (std::size_t i = 0; i < set.constraints.size(); ++i)
        if (set.constraints[i].kind == Constraint::Kind::Elem)
            idx[set.constraints[i].leaf_ordinal] = i;
    return idx;
}

}  // namespace

std::vector<TypedSolution> solve_upto(const ConstraintSet& set, std::size_t limit) {
    std::vector<TypedSolution> out;
    if (limit == 0) return out;
    auto leaf_idx = leaf_constraint_index(set);
    solve_constraints(set, [&](const std::vector<std::uint32_t>& picks, Ref root,
                               const TypeStore& store) {
        out.push_back(TypedSolution{label_skeleton(set.skeleton, picks, leaf_idx),
                                    canonicalize(store.extract(root))});
        return out.size() < limit;
    });
    return out;
}

std::size_t count_solutions_upto(const ConstraintSet& set, std::size_t limit) {
    std::size_t count = 0;
    if (limit == 0) return count;
    solve_constraints(set, [&](const std::vector<std::uint32_t>&, Ref, const TypeStore&) {
        ++count;
        return count < limit;
    });
    return count;
}

bool is_typable_skel(const MotzkinSkeleton& skel) {
    return count_solutions_upto(build_constraints(skel), 1) == 1;
}

bool is_untypable_closable_skel(const MotzkinSkeleton& skel) {
    if (!is_closable(skel)) return false;
    return count_solutions_upto(build_constraints(skel), 1) == 0;
}

bool is_uniquely_typable_skel(const MotzkinSkeleton& skel) {
    return count_solutions_upto(build_constraints(skel), 2) == 1;
}

std::optional<SimpleType> skel_type(const MotzkinSkeleton& skel) {
    if (!is_uniquely_closable(skel))
        throw std::invalid_argument("skel_type: skeleton is not uniquely closable");

    // Specialized inference: exactly one binder variable is in scope above
    // every leaf, so no choice points arise.
    TypeStore store;
    Ref root = store.fresh_var();
    struct Pending {
        Ref expected;
        Ref binder;
    };
    std::vector<Pending> pending;
    Ref expected = root;
    Ref binder = -1;

    for (SkelKind kind : skel.preorder()) {
        switch (kind) {
            case SkelKind::Unary: {
                auto [dom, cod] = store.ensure_arrow(expected);
                binder = dom;
                expected = cod;
                continue;
            }
            case SkelKind::Binary: {
                Ref arg = store.fresh_var();
                pending.push_back({arg, binder});
                expected = store.arrow(arg, expected);
                continue;
            }
            case SkelKind::Leaf: {
                if (!store.unify(expected, binder)) return std::nullopt;
                if (!pending.empty()) {
                    expected = pending.back().expected;
                    binder = pending.back().binder;
                    pending.pop_back();
                }
                continue;
            }
        }
    }
    return canonicalize(store.extract(root));
}

void for_each_uniquely_closable_typable(SizeBudget n, const SkeletonSink& sink) {
    for_each_uniquely_closable(n, [&sink](std::span<const SkelKind> s) {
        MotzkinSkeleton skel = MotzkinSkeleton::from_preorder({s.begin(), s.end()});
        if (!skel_type(skel)) return true;
        return sink(s);
    });
}

std::vector<MotzkinSkeleton> enumerate_uniquely_closable_typable(SizeBudget n) {
    std::vector<MotzkinSkeleton> out;
    for_each_uniquely_closable_typable(n, [&out](std::span<const SkelKind> s) {
        out.push_back(MotzkinSkeleton::from_preorder({s.begin(), s.end()}));
        return true;
    });
    return out;
}

std::uint64_t count_uniquely_closable_typable(SizeBudget n) {
    std::uint64_t count = 0;
    for_each_uniquely_closable_typable(n, [&count](std::span<const SkelKind>) {
        ++count;
        return true;
    });
    return count;
}

std::uint64_t count_typable_closed_terms(SizeBudget n) {
    std::uint64_t total = 0;
    for_each_closable(n, [&total](std::span<const SkelKind> s) {
        MotzkinSkeleton skel = MotzkinSkeleton::from_preorder({s.begin(), s.end()});
        total += count_solutions_upto(build_constraints(skel),
                                      std::numeric_limits<std::size_t>::max());
        return true;
    });
    return total;
}

SkeletonClassCounts classify_skeletons(SizeBudget n) {
    SkeletonClassCounts counts;
    for_each_closable(n, [&counts](std::span<const SkelKind> s) {
        MotzkinSkeleton skel = MotzkinSkeleton::from_preorder({s.begin(), s.end()});
        switch (count_solutions_upto(build_constraints(skel), 2)) {
            case 0: ++counts.untypable_closable; break;
            case 1:
                ++counts.typable;
                ++counts.uniquely_typable;
                break;
            default: ++counts.typable; break;
        }
        return true;
    });
    return counts;
}

BinaryTree to_binary_tree(const MotzkinSkeleton& skel) {
    auto tags = skel.preorder();
    std::vector<BinKind> out;
    std::size_t i = 0;
    while (i < tags.size()) {
        switch (tags[i]) {
            case SkelKind::Binary:
                out.push_back(BinKind::Node);
                ++i;
                break;
            case SkelKind::Unary:
                if (i + 1 >= tags.size() || tags[i + 1] != SkelKind::Leaf)
                    throw std::invalid_argument(
                        "to_binary_tree: unary node whose child is not a leaf");
                out.push_back(BinKind::Leaf);
                i += 2;
                break;
            case SkelKind::Leaf:
                throw std::invalid_argument("to_binary_tree: leaf without its own binder");
        }
    }
    return BinaryTree::from_preorder(std::move(out));
}

MotzkinSkeleton from_binary_tree(const BinaryTree& tree) {
    std::vector<SkelKind> out;
    out.reserve(tree.preorder().size() * 2);
    for (BinKind k : tree.preorder()) {
        if (k == BinKind::Node) {
            out.push_back(SkelKind::Binary);
        } else {
            out.push_back(SkelKind::Unary);
            out.push_back(SkelKind::Leaf);
        }
    }
    return MotzkinSkeleton::from_preorder(std::move(out));
}

}  // namespace lamskel
