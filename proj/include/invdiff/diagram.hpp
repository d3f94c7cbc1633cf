#pragma once

#include "invdiff/operators.hpp"
#include "invdiff/semigroup.hpp"
#include "invdiff/torus.hpp"

#include <string>
#include <utility>
#include <vector>

namespace invdiff {

struct DiagramBounds {
  Int n_min = 0;
  Int n_max = 3;
  Int m_min = -3;
  Int m_max = 3;
};

/// Node sets of a coordinate-ring diagram, each sorted.
struct DiagramNodes {
  /// Elements of S inside the bounds.
  std::vector<Lattice> monomials;
  /// Saturation points missing from S inside the bounds.
  std::vector<Lattice> gaps;
  /// Points outside S reached by a generator with eigen-coefficient zero (the operator kills the
  /// source monomial there). Kept when n_min - 1 <= n <= n_max and m is within bounds.
  std::vector<Lattice> zeros;
};

using NamedOperators = std::vector<std::pair<std::string, OreOperator>>;

DiagramNodes diagram_nodes(const AffineSemigroup2D& s, const NamedOperators& gens, const DiagramBounds& b);

/// Graphviz DOT: monomial nodes labelled in `names`, gap and zero nodes labelled "0", one edge per
/// nonzero action (labelled by generator name) and a dashed edge into each zero node. Node positions
/// put the first coordinate horizontally.
std::string emit_diagram(const AffineSemigroup2D& s, const TorusAction& act, const NamedOperators& gens,
                         const DiagramBounds& b, const Notation& names, const std::string& title);

}  // namespace invdiff
