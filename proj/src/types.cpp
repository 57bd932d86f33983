#include "lamskel/types.hpp"

#include <stdexcept>
#include <unordered_map>

#include "type_store.hpp"

namespace lamskel {

namespace {

bool well_formed_type(std::span<const TypeNodeV> nodes) {
    if (nodes.empty()) return false;
    std::size_t pending = 1;
    for (const TypeNodeV& n : nodes) {
        if (pending == 0) return false;
        --pending;
        if (n.kind == TypeKind::Arrow) pending += 2;
    }
    return pending == 0;
}

// Number of nodes in the subtree starting at `from`.
std::size_t subtree_extent(std::span<const TypeNodeV> nodes, std::size_t from) {
    std::size_t pending = 1;
    std::size_t i = from;
    while (pending > 0) {
        --pending;
        if (nodes[i].kind == TypeKind::Arrow) pending += 2;
        ++i;
    }
    return i - from;
}

}  // namespace

SimpleType SimpleType::var(std::uint32_t id) {
    SimpleType t;
    t.pre_ = {TypeNodeV{TypeKind::Var, id}};
    return t;
}

SimpleType SimpleType::arrow(const SimpleType& domain, const SimpleType& codomain) {
    std::vector<TypeNodeV> nodes;
    nodes.reserve(domain.pre_.size() + codomain.pre_.size() + 1);
    nodes.push_back(TypeNodeV{TypeKind::Arrow, 0});
    nodes.insert(nodes.end(), domain.pre_.begin(), domain.pre_.end());
    nodes.insert(nodes.end(), codomain.pre_.begin(), codomain.pre_.end());
    return SimpleType(std::move(nodes), Unchecked{});
}

SimpleType SimpleType::from_preorder(std::vector<TypeNodeV> nodes) {
    if (!well_formed_type(nodes))
        throw std::invalid_argument("SimpleType::from_preorder: malformed preorder buffer");
    return SimpleType(std::move(nodes), Unchecked{});
}

std::uint32_t SimpleType::var_id() const {
    if (!is_var()) throw std::logic_error("SimpleType::var_id on an arrow type");
    return pre_.front().var;
}

SimpleType SimpleType::domain() const {
    if (!is_arrow()) throw std::logic_error("SimpleType::domain on a type variable");
    std::size_t ext = subtree_extent(pre_, 1);
    return SimpleType(std::vector<TypeNodeV>(pre_.begin() + 1, pre_.begin() + 1 + ext),
                      Unchecked{});
}

SimpleType SimpleType::codomain() const {
    if (!is_arrow()) throw std::logic_error("SimpleType::codomain on a type variable");
    std::size_t ext = subtree_extent(pre_, 1);
    return SimpleType(std::vector<TypeNodeV>(pre_.begin() + 1 + ext, pre_.end()), Unchecked{});
}

std::string to_string(const SimpleType& type) {
    std::string out;
    // pending[j] = children left at the j-th open arrow
    std::vector<int> open;
    for (const TypeNodeV& n : type.preorder()) {
        if (n.kind == TypeKind::Arrow) {
            out += '(';
            open.push_back(2);
            continue;
        }
        out += std::to_string(n.var);
        while (!open.empty()) {
            if (--open.back() > 0) {
                out += "->";
                break;
            }
            out += ')';
            open.pop_back();
        }
    }
    return out;
}

SimpleType canonicalize(const SimpleType& type) {
    std::unordered_map<std::uint32_t, std::uint32_t> rename;
    std::vector<TypeNodeV> nodes(type.preorder().begin(), type.preorder().end());
    for (TypeNodeV& n : nodes) {
        if (n.kind != TypeKind::Var) continue;
        auto [it, inserted] = rename.emplace(n.var, static_cast<std::uint32_t>(rename.size()));
        n.var = it->second;
    }
    return SimpleType::from_preorder(std::move(nodes));
}

bool occurs_in(std::uint32_t var_id, const SimpleType& type) {
    for (const TypeNodeV& n : type.preorder())
        if (n.kind == TypeKind::Var && n.var == var_id) return true;
    return false;
}

SimpleType apply_substitution(const Substitution& subst, const SimpleType& type) {
    std::vector<TypeNodeV> out;
    out.reserve(type.preorder().size());
    for (const TypeNodeV& n : type.preorder()) {
        if (n.kind == TypeKind::Var) {
            auto it = subst.find(n.var);
            if (it != subst.end()) {
                auto image = it->second.preorder();
                out.insert(out.end(), image.begin(), image.end());
                continue;
            }
        }
        out.push_back(n);
    }
    return SimpleType::from_preorder(std::move(out));
}

// ---- TypeStore --------------------------------------------------------------

namespace detail {

TypeStore::Ref TypeStore::fresh_var() {
    nodes_.push_back(Node{});
    return static_cast<Ref>(nodes_.size() - 1);
}

TypeStore::Ref TypeStore::arrow(Ref dom, Ref cod) {
    Node n;
    n.arrow = true;
    n.dom = dom;
    n.cod = cod;
    nodes_.push_back(n);
    return static_cast<Ref>(nodes_.size() - 1);
}

TypeStore::Ref TypeStore::resolve(Ref t) const {
    while (true) {
        const Node& n = nodes_[static_cast<std::size_t>(t)];
        if (n.arrow || n.bind < 0) return t;
        t = n.bind;
    }
}

void TypeStore::bind(Ref var, Ref target) {
    nodes_[static_cast<std::size_t>(var)].bind = target;
    trail_.push_back(var);
}

void TypeStore::rollback(std::size_t mark) {
    while (trail_.size() > mark) {
        nodes_[static_cast<std::size_t>(trail_.back())].bind = -1;
        trail_.pop_back();
    }
}

bool TypeStore::occurs(Ref var, Ref t) const {
    ++epoch_;
    scratch_.clear();
    scratch_.push_back(t);
    while (!scratch_.empty()) {
        Ref cur = resolve(scratch_.back());
        scratch_.pop_back();
        if (cur == var) return true;
        const Node& n = nodes_[static_cast<std::size_t>(cur)];
        if (!n.arrow) continue;
        if (n.stamp == epoch_) continue;  // shared subterm already scanned
        n.stamp = epoch_;
        scratch_.push_back(n.dom);
        scratch_.push_back(n.cod);
    }
    return false;
}

bool TypeStore::unify(Ref a, Ref b) {
    std::vector<std::pair<Ref, Ref>> work{{a, b}};
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        x = resolve(x);
        y = resolve(y);
        if (x == y) continue;
        const bool xv = is_var(x), yv = is_var(y);
        if (xv) {
            if (occurs(x, y)) return false;
            bind(x, y);
            continue;
        }
        if (yv) {
            if (occurs(y, x)) return false;
            bind(y, x);
            continue;
        }
        work.emplace_back(nodes_[static_cast<std::size_t>(x)].dom,
                          nodes_[static_cast<std::size_t>(y)].dom);
        work.emplace_back(nodes_[static_cast<std::size_t>(x)].cod,
                          nodes_[static_cast<std::size_t>(y)].cod);
    }
    return true;
}

std::pair<TypeStore::Ref, TypeStore::Ref> TypeStore::ensure_arrow(Ref t) {
    Ref r = resolve(t);
    if (!is_var(r)) return {dom(r), cod(r)};
    Ref d = fresh_var();
    Ref c = fresh_var();
    bind(r, arrow(d, c));
    return {d, c};
}

SimpleType TypeStore::extract(Ref t) const {
    std::vector<TypeNodeV> out;
    std::vector<Ref> stack{t};
    while (!stack.empty()) {
        Ref cur = resolve(stack.back());
        stack.pop_back();
        const Node& n = nodes_[static_cast<std::size_t>(cur)];
        if (!n.arrow) {
            out.push_back(TypeNodeV{TypeKind::Var, static_cast<std::uint32_t>(cur)});
            continue;
        }
        out.push_back(TypeNodeV{TypeKind::Arrow, 0});
        stack.push_back(n.cod);  // preorder: dom first
        stack.push_back(n.dom);
    }
    return SimpleType::from_preorder(std::move(out));
}

}  // namespace detail

// ---- value-level unify -------------------------------------------------------

namespace {

// Loads a value type into the store, mapping public variable ids to store
// refs through `vmap` (shared across the whole unify call).
detail::TypeStore::Ref load_type(detail::TypeStore& store,
                                 std::unordered_map<std::uint32_t, detail::TypeStore::Ref>& vmap,
                                 const SimpleType& type) {
    auto nodes = type.preorder();
    std::vector<detail::TypeStore::Ref> stack;
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const TypeNodeV& n = nodes[i];
        if (n.kind == TypeKind::Var) {
            auto [it, inserted] = vmap.try_emplace(n.var, -1);
            if (inserted) it->second = store.fresh_var();
            stack.push_back(it->second);
        } else {
            auto dom = stack.back();
            stack.pop_back();
            auto cod = stack.back();
            stack.pop_back();
            stack.push_back(store.arrow(dom, cod));
        }
    }
    return stack.back();
}

// Rewrites store-ref variable ids back to public ids. Refs without a public
// name keep their store id offset past every public id to stay distinct.
SimpleType rename_back(const SimpleType& raw,
                       const std::unordered_map<std::uint32_t, std::uint32_t>& back,
                       std::uint32_t anon_base) {
    std::vector<TypeNodeV> nodes(raw.preorder().begin(), raw.preorder().end());
    for (TypeNodeV& n : nodes) {
        if (n.kind != TypeKind::Var) continue;
        auto it = back.find(n.var);
        n.var = it != back.end() ? it->second : anon_base + n.var;
    }
    return SimpleType::from_preorder(std::move(nodes));
}

}  // namespace

std::optional<Substitution> unify(const SimpleType& a, const SimpleType& b,
                                  const Substitution& base) {
    detail::TypeStore store;
    std::unordered_map<std::uint32_t, detail::TypeStore::Ref> vmap;

    auto ra = load_type(store, vmap, a);
    auto rb = load_type(store, vmap, b);
    for (const auto& [id, image] : base) {
        auto [it, inserted] = vmap.try_emplace(id, -1);
        if (inserted) it->second = store.fresh_var();
        auto ri = load_type(store, vmap, image);
        if (!store.unify(it->second, ri)) return std::nullopt;
    }
    if (!store.unify(ra, rb)) return std::nullopt;

    std::unordered_map<std::uint32_t, std::uint32_t> back;
    std::uint32_t max_public = 0;
    for (const auto& [id, ref] : vmap) {
        back.emplace(static_cast<std::uint32_t>(ref), id);
        max_public = std::max(max_public, id + 1);
    }
    Substitution out;
    for (const auto& [id, ref] : vmap) {
        auto rep = store.resolve(ref);
        if (rep == ref && store.is_var(rep)) continue;  // still a free variable
        out[id] = rename_back(store.extract(ref), back, max_public);
    }
    return out;
}

}  // namespace lamskel
