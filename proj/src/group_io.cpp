#include "halg/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace halg {

using nlohmann::json;

FiniteGroup group_from_json_text(const std::string& text, int order_cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("group file: ") + e.what());
  }
  if (doc.contains("permutation_generators")) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : doc["permutation_generators"])
      gens.push_back(g.get<std::vector<int>>());
    return group_from_permutations(gens, order_cap);
  }
  if (!doc.contains("order") || !doc.contains("cayley"))
    throw ParseError("group file needs either order+cayley or permutation_generators");
  const int order = doc["order"].get<int>();
  if (order > order_cap)
    throw OrderCapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(order_cap));
  auto table = doc["cayley"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != order)
    throw ParseError("cayley table size disagrees with order");
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  try {
    return group_from_cayley(std::move(table), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FiniteGroup group_from_file(const std::string& path, int order_cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_json_text(buf.str(), order_cap);
}

FiniteGroup group_builtin(const std::string& name, int order_cap) {
  auto intarg = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      throw ParseError("bad builtin parameter in: " + name);
    }
  };
  if (name == "trivial") return group_trivial();
  if (name == "quaternion") return group_quaternion();
  if (name.rfind("cyclic:", 0) == 0) return group_cyclic(intarg(name.substr(7)));
  if (name.rfind("dihedral:", 0) == 0) return group_dihedral(intarg(name.substr(9)));
  if (name.rfind("symmetric:", 0) == 0) return group_symmetric(intarg(name.substr(10)), order_cap);
  if (name.rfind("product:", 0) == 0) {
    const std::string args = name.substr(8);
    // Factors may themselves be products; try each comma split.
    for (size_t i = args.find(','); i != std::string::npos; i = args.find(',', i + 1)) {
      try {
        return group_product(group_builtin(args.substr(0, i), order_cap),
                             group_builtin(args.substr(i + 1), order_cap));
      } catch (const ParseError&) {
      }
    }
    throw ParseError("product needs two builtin names: " + name);
  }
  throw ParseError("unknown builtin group: " + name);
}

FiniteGroup group_from_spec(const std::string& spec, int order_cap) {
  if (spec.rfind("builtin:", 0) == 0) return group_builtin(spec.substr(8), order_cap);
  return group_from_file(spec, order_cap);
}

std::string group_to_json_text(const FiniteGroup& g) {
  json doc;
  doc["order"] = g.order;
  doc["cayley"] = g.cayley;
  doc["labels"] = g.labels;
  return doc.dump(2);
}

}  // namespace halg
