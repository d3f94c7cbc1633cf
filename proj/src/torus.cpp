#include "invdiff/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace invdiff {

std::string to_string(const Weight& w) {
  if (w.size() == 1) return std::to_string(w.front());
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(w[k]);
  }
  return out + ")";
}

TorusAction::TorusAction(std::string n, std::vector<Functional> f)
    : name(std::move(n)), functionals(std::move(f)) {
  if (functionals.empty() || functionals.size() > 2) {
    throw std::invalid_argument("TorusAction: expected one or two weight functionals");
  }
}

Weight TorusAction::weight(const Lattice& v) const {
  Weight w;
  w.reserve(functionals.size());
  for (const auto& f : functionals) w.push_back(f(v));
  return w;
}

bool TorusAction::is_trivial() const {
  return std::all_of(functionals.begin(), functionals.end(),
                     [](const Functional& f) { return f.a == 0 && f.b == 0; });
}

}  // namespace invdiff
