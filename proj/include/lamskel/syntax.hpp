#pragma once

#include <string>
#include <string_view>

#include "lamskel/trees.hpp"

namespace lamskel {

// Canonical textual syntax, bit-exact for interop and golden tests:
//   skeletons     v | l(X) | a(X,Y)
//   terms         v(I) | l(X) | a(X,Y)     with decimal index I
//   binary trees  v | a(X,Y)
// Printer and parser are mutually inverse on valid input.
std::string to_string(const MotzkinSkeleton& skel);
std::string to_string(const DeBruijnTerm& term);
std::string to_string(const BinaryTree& tree);

std::string to_string(std::span<const SkelKind> skel);
std::string to_string(std::span<const TermNode> term);
std::string to_string(std::span<const BinKind> tree);

// Throw std::invalid_argument (with byte offset) on malformed input.
MotzkinSkeleton parse_skeleton(std::string_view text);
DeBruijnTerm parse_term(std::string_view text);
BinaryTree parse_binary_tree(std::string_view text);

}  // namespace lamskel
