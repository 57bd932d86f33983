#pragma once

#include <cstdint>
#include <vector>

#include "lamskel/types.hpp"

namespace lamskel::detail {

// Unification arena. Variables are bindable slots; bindings are recorded on
// a trail so that choice points can be rolled back cheaply (mark/rollback).
// The occurs check runs eagerly on every binding.
class TypeStore {
public:
    using Ref = std::int32_t;

    Ref fresh_var();
    Ref arrow(Ref dom, Ref cod);

    bool is_var(Ref t) const { return !nodes_[static_cast<std::size_t>(t)].arrow; }
    Ref dom(Ref t) const { return nodes_[static_cast<std::size_t>(t)].dom; }
    Ref cod(Ref t) const { return nodes_[static_cast<std::size_t>(t)].cod; }

    // Follows variable bindings to the representative node.
    Ref resolve(Ref t) const;

    // Occurs-checked unification; on failure the caller must roll back to
    // its own mark (partial bindings may remain on the trail).
    bool unify(Ref a, Ref b);

    // Binds an unbound variable to a fresh arrow, or decomposes an existing
    // arrow. Used when a construction step knows a type must be functional.
    std::pair<Ref, Ref> ensure_arrow(Ref t);

    std::size_t mark() const { return trail_.size(); }
    void rollback(std::size_t mark);

    // Snapshot of the resolved type as a value; variable ids are store refs.
    SimpleType extract(Ref t) const;

private:
    struct Node {
        bool arrow = false;
        Ref bind = -1;
        Ref dom = -1;
        Ref cod = -1;
        mutable std::uint64_t stamp = 0;
    };
    std::vector<Node> nodes_;
    std::vector<Ref> trail_;
    mutable std::uint64_t epoch_ = 0;
    mutable std::vector<Ref> scratch_;

    bool occurs(Ref var, Ref t) const;
    void bind(Ref var, Ref target);
};

}  // namespace lamskel::detail
