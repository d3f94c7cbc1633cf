#include "invdiff/module_analysis.hpp"

#include "invdiff/linalg.hpp"
#include "invdiff/membership.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace invdiff {
namespace {

using Adjacency = std::map<Lattice, std::set<Lattice>>;

Adjacency adjacency(const ActionGraph& g, bool undirected) {
  Adjacency adj;
  for (const auto& v : g.nodes) adj[v];
  for (const auto& e : g.edges) {
    adj[e.from].insert(e.to);
    if (undirected) adj[e.to].insert(e.from);
  }
  return adj;
}

Adjacency reversed(const ActionGraph& g) {
  Adjacency adj;
  for (const auto& v : g.nodes) adj[v];
  for (const auto& e : g.edges) adj[e.to].insert(e.from);
  return adj;
}

std::set<Lattice> reach(const Adjacency& adj, const Lattice& start) {
  std::set<Lattice> seen{start};
  std::deque<Lattice> queue{start};
  while (!queue.empty()) {
    const Lattice x = queue.front();
    queue.pop_front();
    for (const auto& y : adj.at(x)) {
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

// Value of a diagonal (shift-free) operator at a node; nullopt if the operator moves monomials.
std::optional<GaussRational> diagonal_value(const ShiftDecomposition& dec, const Lattice& node) {
  GaussRational out;
  for (const auto& [v, poly] : dec) {
    const GaussRational val = eval(poly, node);
    if (v == Lattice{0, 0}) {
      out = val;
    } else if (!val.is_zero()) {
      return std::nullopt;
    }
  }
  return out;
}

bool is_constant(const OreOperator& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.first == TermKey{}; });
}

// Shared scalar by which `dec` acts on every basis point, if any.
std::optional<GaussRational> scalar_on(const ShiftDecomposition& dec, const std::vector<Lattice>& basis) {
  std::optional<GaussRational> c;
  for (const auto& b : basis) {
    const auto val = diagonal_value(dec, b);
    if (!val) return std::nullopt;
    if (c && *c != *val) return std::nullopt;
    c = val;
  }
  return c;
}

// w lies in the span of the generator words of length 0..max_len.
bool in_generated_algebra(const OreOperator& w, const std::vector<OreOperator>& gens, unsigned max_len) {
  std::vector<OreOperator> words{OreOperator::scalar(w.mode(), 1)};
  std::vector<OreOperator> level = words;
  for (unsigned len = 1; len <= max_len; ++len) {
    std::vector<OreOperator> next;
    for (const auto& x : level) {
      for (const auto& g : gens) {
        if (g.mode() != w.mode()) return false;
        next.push_back(x * g);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::map<TermKey, std::size_t> index;
  for (const auto& x : words) {
    for (const auto& [k, c] : x.terms()) index.emplace(k, index.size());
  }
  for (const auto& [k, c] : w.terms()) {
    if (!index.count(k)) return false;
  }
  auto vec = [&](const OreOperator& p) {
    Vector v(index.size());
    for (const auto& [k, c] : p.terms()) v[index.at(k)] = c;
    return v;
  };
  SpanBuilder span(index.size());
  for (const auto& x : words) span.add(vec(x));
  return span.contains(vec(w));
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

bool ActionGraph::has_node(const Lattice& v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

ActionGraph build_action_graph(const std::vector<OreOperator>& gens, const std::vector<Lattice>& basis,
                               const AffineSemigroup2D& s, const TorusAction& act) {
  std::vector<ShiftDecomposition> decs;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!preserves_ring(gens[k], s).preserved) {
      throw InvalidGenerator("generator " + std::to_string(k) + " (" + gens[k].str() + ") does not preserve the ring");
    }
    if (!is_invariant(gens[k], act)) {
      throw InvalidGenerator("generator " + std::to_string(k) + " (" + gens[k].str() + ") is not " + act.name +
                             "-invariant");
    }
    decs.push_back(gens[k].shift_decomposition());
  }
  ActionGraph g;
  g.generators = gens;
  g.nodes = basis;
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  for (const auto& node : g.nodes) {
    for (std::size_t k = 0; k < decs.size(); ++k) {
      for (const auto& [v, poly] : decs[k]) {
        const GaussRational val = eval(poly, node);
        if (val.is_zero()) continue;
        ActionEdge e{node, node + v, k, val};
        (g.has_node(e.to) ? g.edges : g.boundary_edges).push_back(std::move(e));
      }
    }
  }
  return g;
}

std::string to_string(Irreducibility x) {
  switch (x) {
    case Irreducibility::Irreducible:
      return "irreducible";
    case Irreducibility::Reducible:
      return "reducible";
    case Irreducibility::Inconclusive:
      break;
  }
  return "inconclusive";
}

std::string to_string(Decomposability x) {
  switch (x) {
    case Decomposability::Indecomposable:
      return "indecomposable";
    case Decomposability::Decomposable:
      return "decomposable";
    case Decomposability::Inconclusive:
      break;
  }
  return "inconclusive";
}

std::string ModuleVerdict::status() const {
  if (irreducibility == Irreducibility::Inconclusive) return "inconclusive";
  if (irreducibility == Irreducibility::Irreducible) return "irreducible";
  if (decomposability == Decomposability::Decomposable) return "decomposable";
  return "reducible, " + to_string(decomposability);
}

ModuleVerdict decide_structure(const ActionGraph& g, const std::vector<OreOperator>& diagonal_witness) {
  ModuleVerdict out;
  if (g.nodes.empty()) {
    out.note = "empty basis";
    return out;
  }
  if (diagonal_witness.empty()) {
    out.note = "no diagonal witness";
    return out;
  }
  for (const auto& w : diagonal_witness) {
    if (!in_generated_algebra(w, g.generators, 3)) {
      out.note = "witness " + w.str() + " is not in the generated algebra";
      return out;
    }
  }
  // Distinct joint eigenvalues force every submodule to be spanned by basis monomials.
  std::vector<ShiftDecomposition> decs;
  for (const auto& w : diagonal_witness) decs.push_back(w.shift_decomposition());
  std::set<std::vector<GaussRational>> seen;
  for (const auto& node : g.nodes) {
    std::vector<GaussRational> tuple;
    for (const auto& d : decs) {
      const auto val = diagonal_value(d, node);
      if (!val) {
        out.note = "witness is not diagonal on the basis";
        out.separation.clear();
        return out;
      }
      tuple.push_back(*val);
    }
    if (!seen.insert(tuple).second) {
      out.note = "witness eigenvalues repeat at " + to_string(node);
      out.separation.clear();
      return out;
    }
    out.separation.push_back(std::move(tuple));
  }

  const Adjacency fwd = adjacency(g, false);
  const Adjacency bwd = reversed(g);
  if (reach(fwd, g.nodes.front()).size() == g.nodes.size() && reach(bwd, g.nodes.front()).size() == g.nodes.size()) {
    out.irreducibility = Irreducibility::Irreducible;
  } else {
    out.irreducibility = Irreducibility::Reducible;
    // The complement of a source component is closed; take the first source in node order.
    for (const auto& node : g.nodes) {
      const auto ahead = reach(fwd, node);
      const auto behind = reach(bwd, node);
      std::set<Lattice> scc;
      std::set_intersection(ahead.begin(), ahead.end(), behind.begin(), behind.end(), std::inserter(scc, scc.end()));
      if (behind.size() != scc.size()) continue;  // something outside reaches in
      for (const auto& v : g.nodes) {
        if (!scc.count(v)) out.closed_subset.push_back(v);
      }
      break;
    }
  }

  const Adjacency und = adjacency(g, true);
  const auto comp = reach(und, g.nodes.front());
  if (comp.size() == g.nodes.size()) {
    out.decomposability = Decomposability::Indecomposable;
  } else {
    out.decomposability = Decomposability::Decomposable;
    for (const auto& v : g.nodes) (comp.count(v) ? out.part_a : out.part_b).push_back(v);
  }
  if (!g.boundary_edges.empty()) {
    const std::size_t k = g.boundary_edges.size();
    out.note = std::to_string(k) + (k == 1 ? " edge leaves" : " edges leave") + " the truncation";
  }
  return out;
}

bool verify_verdict(const ActionGraph& g, const ModuleVerdict& v) {
  const std::set<Lattice> all(g.nodes.begin(), g.nodes.end());
  auto closed = [&](const std::set<Lattice>& part) {
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [&](const ActionEdge& e) { return !part.count(e.from) || part.count(e.to); });
  };
  if (v.irreducibility == Irreducibility::Inconclusive) return v.decomposability == Decomposability::Inconclusive;
  if (v.separation.size() != g.nodes.size()) return false;
  if (std::set<std::vector<GaussRational>>(v.separation.begin(), v.separation.end()).size() != g.nodes.size()) {
    return false;
  }
  if (v.irreducibility == Irreducibility::Reducible) {
    const std::set<Lattice> sub(v.closed_subset.begin(), v.closed_subset.end());
    if (sub.empty() || sub.size() >= all.size()) return false;
    if (!std::includes(all.begin(), all.end(), sub.begin(), sub.end())) return false;
    if (!closed(sub)) return false;
  } else {
    // every node reaches every other node
    const Adjacency fwd = adjacency(g, false);
    for (const auto& x : g.nodes) {
      if (reach(fwd, x).size() != all.size()) return false;
    }
  }
  if (v.decomposability == Decomposability::Decomposable) {
    const std::set<Lattice> a(v.part_a.begin(), v.part_a.end()), b(v.part_b.begin(), v.part_b.end());
    if (a.empty() || b.empty() || a.size() + b.size() != all.size()) return false;
    for (const auto& x : a) {
      if (b.count(x)) return false;
    }
    if (!closed(a) || !closed(b)) return false;
  } else if (v.decomposability == Decomposability::Indecomposable) {
    if (reach(adjacency(g, true), g.nodes.front()).size() != all.size()) return false;
  }
  return true;
}

ModuleVerdict analyze_module(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                             const std::vector<OreOperator>& gens, const std::vector<OreOperator>& diagonal_witness,
                             Int truncation) {
  const auto space = multiplicity_space(s, act, lambda, truncation);
  ModuleVerdict out = decide_structure(build_action_graph(gens, space.basis, s, act), diagonal_witness);
  std::vector<std::string> notes;
  if (!out.note.empty()) notes.push_back(out.note);
  if (space.complete) {
    out.stable = true;
    notes.push_back("complete weight space");
  } else {
    const auto larger = multiplicity_space(s, act, lambda, truncation + 5);
    const auto again = decide_structure(build_action_graph(gens, larger.basis, s, act), diagonal_witness);
    out.stable = again.irreducibility == out.irreducibility && again.decomposability == out.decomposability;
    notes.push_back(std::string(*out.stable ? "stable" : "unstable") + " at truncation " +
                    std::to_string(truncation + 5));
  }
  out.note = join(notes);
  return out;
}

bool are_equivalent(const std::vector<Lattice>& basis_a, const std::vector<Lattice>& basis_b,
                    const std::vector<OreOperator>& gens, const std::vector<OreOperator>& diagonal_witness) {
  auto sorted = [](std::vector<Lattice> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(basis_a) == sorted(basis_b)) return true;
  for (const auto& w : diagonal_witness) {
    // The certificate only transfers along module maps when the witness lies in the acting algebra.
    if (!in_generated_algebra(w, gens, 3)) continue;
    const auto dec = w.shift_decomposition();
    std::set<GaussRational> spec_a, spec_b;
    bool diagonal = true;
    for (const auto& b : basis_a) {
      const auto v = diagonal_value(dec, b);
      diagonal = diagonal && v;
      if (v) spec_a.insert(*v);
    }
    for (const auto& b : basis_b) {
      const auto v = diagonal_value(dec, b);
      diagonal = diagonal && v;
      if (v) spec_b.insert(*v);
    }
    if (!diagonal) continue;
    const bool disjoint = std::none_of(spec_a.begin(), spec_a.end(), [&](const auto& x) { return spec_b.count(x); });
    if (disjoint) return false;
  }
  throw Inconclusive("are_equivalent: no witness separates the two spaces");
}

CommutativityResult is_commutative(const std::vector<OreOperator>& gens, unsigned order_bound) {
  struct Word {
    std::vector<std::size_t> letters;
    OreOperator op;
  };
  std::vector<Word> words;
  std::vector<Word> level;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].order() <= order_bound) level.push_back({{k}, gens[k]});
  }
  for (unsigned len = 1; len <= std::max(order_bound, 1u) && !level.empty(); ++len) {
    words.insert(words.end(), level.begin(), level.end());
    if (len == std::max(order_bound, 1u)) break;
    std::vector<Word> next;
    for (const auto& w : level) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        OreOperator p = w.op * gens[k];
        if (p.is_zero() || p.order() > order_bound) continue;
        auto letters = w.letters;
        letters.push_back(k);
        next.push_back({std::move(letters), std::move(p)});
      }
    }
    level = std::move(next);
  }
  CommutativityResult out;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      OreOperator c = commutator(words[a].op, words[b].op);
      if (c.is_zero()) continue;
      out.commutative = false;
      out.word_a = words[a].letters;
      out.word_b = words[b].letters;
      out.commutator = std::move(c);
      return out;
    }
  }
  return out;
}

std::vector<OreOperator> center_candidates(const std::vector<OreOperator>& gens, const TorusAction& act,
                                           const Window& window, unsigned order_bound, SecondMode mode) {
  const Weight zero(act.arity(), 0);
  const bool angular = mode == SecondMode::Angular;
  std::vector<TermKey> cols;
  for (Int a = window.a_min; a <= window.a_max; ++a) {
    for (Int b = window.b_min; b <= window.b_max; ++b) {
      for (unsigned d1 = 0; d1 <= order_bound; ++d1) {
        for (unsigned d2 = 0; d1 + d2 <= order_bound; ++d2) {
          const Lattice shift{a - static_cast<Int>(d1), b - (angular ? 0 : static_cast<Int>(d2))};
          if (act.weight(shift) == zero) cols.push_back({{a, b}, d1, d2});
        }
      }
    }
  }
  // Leading (pivot) terms should be the top-order ones.
  std::sort(cols.begin(), cols.end(), [](const TermKey& x, const TermKey& y) {
    if (x.order() != y.order()) return x.order() > y.order();
    return x > y;
  });

  std::map<std::pair<std::size_t, TermKey>, std::size_t> row_index;
  std::vector<std::map<std::size_t, GaussRational>> entries(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto t = OreOperator::term(mode, cols[c], 1);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const OreOperator c_tg = commutator(t, gens[g]);
      for (const auto& [k, v] : c_tg.terms()) {
        const auto r = row_index.emplace(std::pair{g, k}, row_index.size()).first->second;
        entries[c][r] = v;
      }
    }
  }
  Matrix m(row_index.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : entries[c]) m(r, c) = v;
  }
  // Reduced echelon basis of the solution space.
  Matrix basis;
  for (const auto& x : nullspace(std::move(m))) basis.append_row(x);
  std::vector<OreOperator> out;
  if (basis.rows() == 0) return out;
  rref(basis);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    OreOperator p(mode);
    for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], basis(r, c));
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const OreOperator& a, const OreOperator& b) { return a.order() < b.order(); });
  return out;
}

std::size_t count_center_generators(const std::vector<OreOperator>& center, unsigned order_bound) {
  if (center.empty()) return 0;
  const SecondMode mode = center.front().mode();
  std::vector<OreOperator> sorted = center;
  std::stable_sort(sorted.begin(), sorted.end(), [](const OreOperator& a, const OreOperator& b) { return a.order() < b.order(); });

  std::vector<OreOperator> generators;
  auto products = [&]() {
    std::vector<OreOperator> out{OreOperator::scalar(mode, 1)};
    std::vector<OreOperator> level = out;
    for (unsigned len = 1; len <= order_bound; ++len) {
      std::vector<OreOperator> next;
      for (const auto& w : level) {
        for (const auto& g : generators) {
          auto p = w * g;
          if (!p.is_zero() && p.order() <= order_bound) next.push_back(std::move(p));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  };
  for (const auto& z : sorted) {
    if (is_constant(z)) continue;
    const auto prods = products();
    std::map<TermKey, std::size_t> index;
    for (const auto& p : prods) {
      for (const auto& [k, c] : p.terms()) index.emplace(k, index.size());
    }
    for (const auto& [k, c] : z.terms()) index.emplace(k, index.size());
    SpanBuilder span(index.size());
    auto vec = [&](const OreOperator& p) {
      Vector v(index.size());
      for (const auto& [k, c] : p.terms()) v[index[k]] = c;
      return v;
    };
    for (const auto& p : prods) span.add(vec(p));
    if (!span.contains(vec(z))) generators.push_back(z);
  }
  return generators.size();
}

SeparationResult character_separation(const std::vector<OreOperator>& center, const std::vector<Weight>& weights,
                                      const AffineSemigroup2D& s, const TorusAction& act, Int truncation) {
  std::vector<ShiftDecomposition> decs;
  for (const auto& z : center) decs.push_back(z.shift_decomposition());
  SeparationResult out;
  std::set<std::vector<GaussRational>> seen;
  out.separated = true;
  for (const auto& w : weights) {
    const auto space = multiplicity_space(s, act, w, truncation);
    if (space.basis.empty()) throw Inconclusive("character_separation: empty weight space " + to_string(w));
    std::vector<GaussRational> chi;
    for (std::size_t k = 0; k < center.size(); ++k) {
      const auto c = scalar_on(decs[k], space.basis);
      if (!c) {
        throw Inconclusive("character_separation: " + center[k].str() + " is not scalar on weight " + to_string(w) +
                           (space.complete ? " (complete space)" : ""));
      }
      chi.push_back(*c);
    }
    if (!seen.insert(chi).second) out.separated = false;
    out.characters.emplace_back(w, std::move(chi));
  }
  return out;
}

DensityResult density_check(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                            const std::vector<OreOperator>& gens, unsigned word_length, Int truncation) {
  const auto space = multiplicity_space(s, act, lambda, truncation);
  if (!space.complete) throw IncompleteSpace("density_check: weight space " + to_string(lambda) + " is not complete");
  const std::size_t d = space.dimension();
  std::map<Lattice, std::size_t> index;
  for (const auto& b : space.basis) index.emplace(b, index.size());

  std::vector<Matrix> mats;
  for (const auto& g : gens) {
    Matrix m(d, d);
    const auto dec = g.shift_decomposition();
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [v, poly] : dec) {
        const GaussRational val = eval(poly, space.basis[j]);
        if (val.is_zero()) continue;
        const auto it = index.find(space.basis[j] + v);
        if (it == index.end()) throw InvalidGenerator("density_check: " + g.str() + " leaves the weight space");
        m(it->second, j) += val;
      }
    }
    mats.push_back(std::move(m));
  }

  DensityResult out{0, d * d};
  SpanBuilder span(d * d);
  std::vector<Matrix> frontier{Matrix::identity(d)};
  span.add(frontier.front().flatten());
  for (unsigned len = 1; len <= word_length && !frontier.empty() && span.dimension() < d * d; ++len) {
    std::vector<Matrix> next;
    for (const auto& w : frontier) {
      for (const auto& g : mats) {
        Matrix p = w * g;
        if (span.add(p.flatten())) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  out.achieved = span.dimension();
  return out;
}

OreOperator annihilator_witness(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                                const std::vector<OreOperator>& center, Int truncation) {
  if (spectrum_and_rank(s, act, std::max<Int>(truncation, 1)).rank == 0) {
    throw NoWitness("annihilator_witness: rank-zero action, every weight space is faithful");
  }
  const auto space = multiplicity_space(s, act, lambda, truncation);
  for (const auto& z : center) {
    if (is_constant(z)) continue;
    const auto dec = z.shift_decomposition();
    const auto c = scalar_on(dec, space.basis);
    if (!c) continue;
    OreOperator cand = z - OreOperator::scalar(z.mode(), *c);
    if (cand.is_zero()) continue;
    const auto cdec = cand.shift_decomposition();
    const bool kills = std::all_of(space.basis.begin(), space.basis.end(), [&](const Lattice& b) {
      return std::all_of(cdec.begin(), cdec.end(), [&](const auto& kv) { return eval(kv.second, b).is_zero(); });
    });
    if (kills) return cand;
  }
  throw NoWitness("annihilator_witness: no center element acts by a scalar on weight " + to_string(lambda));
}

}  // namespace invdiff
