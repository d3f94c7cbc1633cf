#pragma once

#include "invdiff/semigroup.hpp"

#include <string>
#include <vector>

namespace invdiff {

/// Character of a torus: one integer per weight functional.
using Weight = std::vector<Int>;

std::string to_string(const Weight& w);

/// Torus acting diagonally on monomials through integer weight functionals.
struct TorusAction {
  std::string name;
  std::vector<Functional> functionals;

  TorusAction() = default;
  TorusAction(std::string name, std::vector<Functional> functionals);

  Weight weight(const Lattice& v) const;
  std::size_t arity() const { return functionals.size(); }
  bool is_trivial() const;

  static TorusAction scaling() { return {"scaling", {{1, 0}}}; }
  static TorusAction rotation() { return {"rotation", {{0, 1}}}; }
  static TorusAction full() { return {"torus", {{1, 0}, {0, 1}}}; }
  static TorusAction trivial() { return {"trivial", {{0, 0}}}; }
};

}  // namespace invdiff
