#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lamskel {

enum class TypeKind : std::uint8_t { Var = 0, Arrow = 1 };

struct TypeNodeV {
    TypeKind kind;
    std::uint32_t var = 0;  // meaningful for Var nodes only
    bool operator==(const TypeNodeV&) const = default;
};

// Simple types: type variables and arrows, stored flat in preorder like the
// tree families. Finite by construction; unification never produces a type
// containing one of its own variables.
class SimpleType {
public:
    SimpleType() = default;  // type variable 0

    static SimpleType var(std::uint32_t id);
    static SimpleType arrow(const SimpleType& domain, const SimpleType& codomain);
    static SimpleType from_preorder(std::vector<TypeNodeV> nodes);

    std::span<const TypeNodeV> preorder() const { return pre_; }

    bool is_var() const { return pre_.front().kind == TypeKind::Var; }
    bool is_arrow() const { return pre_.front().kind == TypeKind::Arrow; }
    std::uint32_t var_id() const;   // root variable id (requires is_var)
    SimpleType domain() const;      // requires is_arrow
    SimpleType codomain() const;    // requires is_arrow

    bool operator==(const SimpleType&) const = default;

private:
    struct Unchecked {};
    SimpleType(std::vector<TypeNodeV> nodes, Unchecked) : pre_(std::move(nodes)) {}
    std::vector<TypeNodeV> pre_{TypeNodeV{TypeKind::Var, 0}};
};

// Output syntax: decimal variable ids, every arrow wrapped in parentheses:
// 0, (0->1), ((0->0)->1).
std::string to_string(const SimpleType& type);

// Renumbers variables 0,1,2,... in first-occurrence order (printing order).
SimpleType canonicalize(const SimpleType& type);

bool occurs_in(std::uint32_t var_id, const SimpleType& type);

// Idempotent variable bindings. Images never mention bound variables.
using Substitution = std::map<std::uint32_t, SimpleType>;

// Most general unifier of a and b extending `base`, or failure as a value.
// Failure covers both constructor clash and occurs-check violation.
std::optional<Substitution> unify(const SimpleType& a, const SimpleType& b,
                                  const Substitution& base = {});

SimpleType apply_substitution(const Substitution& subst, const SimpleType& type);

}  // namespace lamskel
