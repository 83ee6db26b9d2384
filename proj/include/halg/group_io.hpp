#pragma once

#include <string>

#include "halg/group.hpp"

namespace halg {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& w) : std::runtime_error(w) {}
};

// JSON document with either {"order", "cayley", "labels"?} or
// {"permutation_generators": [[...one-line images, 1-based...], ...]}.
FiniteGroup group_from_json_text(const std::string& text, int order_cap = kDefaultOrderCap);
FiniteGroup group_from_file(const std::string& path, int order_cap = kDefaultOrderCap);

// Builtin names: trivial, cyclic:n, dihedral:n, symmetric:n, quaternion,
// product:A,B (A and B themselves builtin names).
FiniteGroup group_builtin(const std::string& name, int order_cap = kDefaultOrderCap);

// Accepts "builtin:NAME" or a file path.
FiniteGroup group_from_spec(const std::string& spec, int order_cap = kDefaultOrderCap);

std::string group_to_json_text(const FiniteGroup& g);

}  // namespace halg
