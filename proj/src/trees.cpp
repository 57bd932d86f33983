#include "lamskel/trees.hpp"

namespace lamskel {

namespace {

int arity(SkelKind k) {
    switch (k) {
        case SkelKind::Leaf: return 0;
        case SkelKind::Unary: return 1;
        case SkelKind::Binary: return 2;
    }
    return 0;
}

int arity(TermKind k) {
    switch (k) {
        case TermKind::Var: return 0;
        case TermKind::Lam: return 1;
        case TermKind::App: return 2;
    }
    return 0;
}

int arity(BinKind k) { return k == BinKind::Node ? 2 : 0; }

// A preorder buffer encodes exactly one tree iff the pending-subtree count
// hits zero exactly at the end.
template <typename Tag, typename ArityFn>
bool well_formed(std::span<const Tag> tags, ArityFn ar) {
    if (tags.empty()) return false;
    std::size_t pending = 1;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (pending == 0) return false;
        pending += static_cast<std::size_t>(ar(tags[i]));
        --pending;
    }
    return pending == 0;
}

}  // namespace

MotzkinSkeleton MotzkinSkeleton::leaf() { return MotzkinSkeleton(); }

MotzkinSkeleton MotzkinSkeleton::unary(const MotzkinSkeleton& child) {
    std::vector<SkelKind> tags;
    tags.reserve(child.pre_.size() + 1);
    tags.push_back(SkelKind::Unary);
    tags.insert(tags.end(), child.pre_.begin(), child.pre_.end());
    return MotzkinSkeleton(std::move(tags), Unchecked{});
}

MotzkinSkeleton MotzkinSkeleton::binary(const MotzkinSkeleton& left, const MotzkinSkeleton& right) {
    std::vector<SkelKind> tags;
    tags.reserve(left.pre_.size() + right.pre_.size() + 1);
    tags.push_back(SkelKind::Binary);
    tags.insert(tags.end(), left.pre_.begin(), left.pre_.end());
    tags.insert(tags.end(), right.pre_.begin(), right.pre_.end());
    return MotzkinSkeleton(std::move(tags), Unchecked{});
}

MotzkinSkeleton MotzkinSkeleton::from_preorder(std::vector<SkelKind> tags) {
    if (!well_formed(std::span<const SkelKind>(tags), [](SkelKind k) { return arity(k); }))
        throw std::invalid_argument("MotzkinSkeleton::from_preorder: malformed preorder buffer");
    return MotzkinSkeleton(std::move(tags), Unchecked{});
}

DeBruijnTerm DeBruijnTerm::var(std::uint32_t index) {
    DeBruijnTerm t;
    t.pre_ = {TermNode{TermKind::Var, index}};
    return t;
}

DeBruijnTerm DeBruijnTerm::lam(const DeBruijnTerm& body) {
    std::vector<TermNode> nodes;
    nodes.reserve(body.pre_.size() + 1);
    nodes.push_back(TermNode{TermKind::Lam, 0});
    nodes.insert(nodes.end(), body.pre_.begin(), body.pre_.end());
    return DeBruijnTerm(std::move(nodes), Unchecked{});
}

DeBruijnTerm DeBruijnTerm::app(const DeBruijnTerm& fun, const DeBruijnTerm& arg) {
    std::vector<TermNode> nodes;
    nodes.reserve(fun.pre_.size() + arg.pre_.size() + 1);
    nodes.push_back(TermNode{TermKind::App, 0});
    nodes.insert(nodes.end(), fun.pre_.begin(), fun.pre_.end());
    nodes.insert(nodes.end(), arg.pre_.begin(), arg.pre_.end());
    return DeBruijnTerm(std::move(nodes), Unchecked{});
}

DeBruijnTerm DeBruijnTerm::from_preorder(std::vector<TermNode> nodes) {
    if (!well_formed(std::span<const TermNode>(nodes),
                     [](const TermNode& n) { return arity(n.kind); }))
        throw std::invalid_argument("DeBruijnTerm::from_preorder: malformed preorder buffer");
    return DeBruijnTerm(std::move(nodes), Unchecked{});
}

BinaryTree BinaryTree::leaf() { return BinaryTree(); }

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
    std::vector<BinKind> tags;
    tags.reserve(left.pre_.size() + right.pre_.size() + 1);
    tags.push_back(BinKind::Node);
    tags.insert(tags.end(), left.pre_.begin(), left.pre_.end());
    tags.insert(tags.end(), right.pre_.begin(), right.pre_.end());
    return BinaryTree(std::move(tags), Unchecked{});
}

BinaryTree BinaryTree::from_preorder(std::vector<BinKind> tags) {
    if (!well_formed(std::span<const BinKind>(tags), [](BinKind k) { return arity(k); }))
        throw std::invalid_argument("BinaryTree::from_preorder: malformed preorder buffer");
    return BinaryTree(std::move(tags), Unchecked{});
}

std::size_t BinaryTree::internal_node_count() const {
    std::size_t n = 0;
    for (BinKind k : pre_)
        if (k == BinKind::Node) ++n;
    return n;
}

std::uint64_t size(std::span<const SkelKind> skel) {
    std::uint64_t total = 0;
    for (SkelKind k : skel) {
        if (k == SkelKind::Unary)
            total += SizePolicy::lambda_cost;
        else if (k == SkelKind::Binary)
            total += SizePolicy::application_cost;
    }
    return total;
}

std::uint64_t size(std::span<const TermNode> term) {
    std::uint64_t total = 0;
    for (const TermNode& n : term) {
        if (n.kind == TermKind::Lam)
            total += SizePolicy::lambda_cost;
        else if (n.kind == TermKind::App)
            total += SizePolicy::application_cost;
    }
    return total;
}

std::uint64_t leaf_count(std::span<const SkelKind> skel) {
    std::uint64_t n = 0;
    for (SkelKind k : skel)
        if (k == SkelKind::Leaf) ++n;
    return n;
}

std::uint64_t binary_node_count(std::span<const SkelKind> skel) {
    std::uint64_t n = 0;
    for (SkelKind k : skel)
        if (k == SkelKind::Binary) ++n;
    return n;
}

MotzkinSkeleton to_skeleton(const DeBruijnTerm& term) {
    std::vector<SkelKind> tags;
    tags.reserve(term.node_count());
    for (const TermNode& n : term.preorder()) {
        switch (n.kind) {
            case TermKind::Var: tags.push_back(SkelKind::Leaf); break;
            case TermKind::Lam: tags.push_back(SkelKind::Unary); break;
            case TermKind::App: tags.push_back(SkelKind::Binary); break;
        }
    }
    return MotzkinSkeleton::from_preorder(std::move(tags));
}

// The preorder walks below carry the per-path binder count V explicitly:
// a Binary node saves V for its right subtree, a Unary node increments it.
namespace {

template <typename Tag, typename LeafCheck>
bool walk_with_binder_depth(std::span<const Tag> tags, LeafCheck at_leaf) {
    std::vector<std::uint32_t> pending;  // binder depths of upcoming right subtrees
    std::uint32_t depth = 0;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        const Tag& t = tags[i];
        if constexpr (std::is_same_v<Tag, SkelKind>) {
            if (t == SkelKind::Unary) {
                ++depth;
                continue;
            }
            if (t == SkelKind::Binary) {
                pending.push_back(depth);
                continue;
            }
            if (!at_leaf(t, depth)) return false;
        } else {
            if (t.kind == TermKind::Lam) {
                ++depth;
                continue;
            }
            if (t.kind == TermKind::App) {
                pending.push_back(depth);
                continue;
            }
            if (!at_leaf(t, depth)) return false;
        }
        if (!pending.empty()) {
            depth = pending.back();
            pending.pop_back();
        }
    }
    return true;
}

}  // namespace

bool is_closed(std::span<const TermNode> term) {
    return walk_with_binder_depth(term, [](const TermNode& n, std::uint32_t depth) {
        return n.index < depth;
    });
}

bool is_closable(std::span<const SkelKind> skel) {
    return walk_with_binder_depth(skel,
                                  [](SkelKind, std::uint32_t depth) { return depth > 0; });
}

bool is_uniquely_closable(std::span<const SkelKind> skel) {
    return walk_with_binder_depth(skel,
                                  [](SkelKind, std::uint32_t depth) { return depth == 1; });
}

DeBruijnTerm close_unique(const MotzkinSkeleton& skel) {
    if (!is_uniquely_closable(skel))
        throw std::invalid_argument("close_unique: skeleton is not uniquely closable");
    std::vector<TermNode> nodes;
    nodes.reserve(skel.node_count());
    for (SkelKind k : skel.preorder()) {
        switch (k) {
            case SkelKind::Leaf: nodes.push_back(TermNode{TermKind::Var, 0}); break;
            case SkelKind::Unary: nodes.push_back(TermNode{TermKind::Lam, 0}); break;
            case SkelKind::Binary: nodes.push_back(TermNode{TermKind::App, 0}); break;
        }
    }
    return DeBruijnTerm::from_preorder(std::move(nodes));
}

}  // namespace lamskel
