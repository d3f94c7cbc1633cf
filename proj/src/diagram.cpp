#include "invdiff/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace invdiff {
namespace {

bool zero_allowed(const Lattice& p, const DiagramBounds& b) {
  return b.n_min - 1 <= p.n && p.n <= b.n_max && b.m_min <= p.m && p.m <= b.m_max;
}

std::string id(const Lattice& p) { return "\"" + to_string(p) + "\""; }

}  // namespace

DiagramNodes diagram_nodes(const AffineSemigroup2D& s, const NamedOperators& gens, const DiagramBounds& b) {
  const auto& nf = s.normal_form();
  DiagramNodes out;
  for (Int n = b.n_min; n <= b.n_max; ++n) {
    for (Int m = b.m_min; m <= b.m_max; ++m) {
      const Lattice p{n, m};
      if (s.contains(p)) {
        out.monomials.push_back(p);
      } else if (nf.in_saturation(p)) {
        out.gaps.push_back(p);
      }
    }
  }
  std::set<Lattice> zeros;
  for (const auto& [name, op] : gens) {
    for (const auto& [v, poly] : op.shift_decomposition()) {
      for (const auto& p : out.monomials) {
        const Lattice t = p + v;
        if (eval(poly, p).is_zero() && !s.contains(t) && !nf.in_saturation(t) && zero_allowed(t, b)) zeros.insert(t);
      }
    }
  }
  out.zeros.assign(zeros.begin(), zeros.end());
  return out;
}

std::string emit_diagram(const AffineSemigroup2D& s, const TorusAction& act, const NamedOperators& gens,
                         const DiagramBounds& b, const Notation& names, const std::string& title) {
  const DiagramNodes nodes = diagram_nodes(s, gens, b);
  const std::set<Lattice> shown(nodes.monomials.begin(), nodes.monomials.end());
  const std::set<Lattice> zeros(nodes.zeros.begin(), nodes.zeros.end());

  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  layout=neato;\n";
  os << "  node [shape=plaintext];\n";
  auto place = [&](const Lattice& p) { return "pos=\"" + std::to_string(2 * p.n) + "," + std::to_string(p.m) + "!\""; };
  for (const auto& p : nodes.monomials) {
    os << "  " << id(p) << " [label=\"" << OreOperator::monomial(names.mode, p).str(names) << "\", " << place(p)
       << ", tooltip=\"weight " << to_string(act.weight(p)) << "\"];\n";
  }
  for (const auto& p : nodes.gaps) os << "  " << id(p) << " [label=\"0\", class=\"gap\", " << place(p) << "];\n";
  for (const auto& p : nodes.zeros) os << "  " << id(p) << " [label=\"0\", class=\"zero\", " << place(p) << "];\n";
  for (const auto& [name, op] : gens) {
    const auto dec = op.shift_decomposition();
    for (const auto& p : nodes.monomials) {
      for (const auto& [v, poly] : dec) {
        const Lattice t = p + v;
        if (!eval(poly, p).is_zero()) {
          if (shown.count(t)) os << "  " << id(p) << " -> " << id(t) << " [label=\"" << name << "\"];\n";
        } else if (zeros.count(t)) {
          os << "  " << id(p) << " -> " << id(t) << " [label=\"" << name << "\", style=dashed];\n";
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace invdiff
