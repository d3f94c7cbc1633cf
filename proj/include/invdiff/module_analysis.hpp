#pragma once

#include "invdiff/derivations.hpp"
#include "invdiff/frobenius.hpp"
#include "invdiff/operators.hpp"
#include "invdiff/semigroup.hpp"
#include "invdiff/torus.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invdiff {

struct InvalidGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteSpace : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoWitness : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ActionEdge {
  Lattice from;
  Lattice to;
  std::size_t generator = 0;
  GaussRational value;

  friend bool operator==(const ActionEdge&, const ActionEdge&) = default;
};

/// Monomial basis nodes with an edge s -> s+v for every nonzero eigen-coefficient p_v(s).
struct ActionGraph {
  std::vector<OreOperator> generators;
  std::vector<Lattice> nodes;
  std::vector<ActionEdge> edges;
  /// Edges whose target lies beyond the truncation.
  std::vector<ActionEdge> boundary_edges;

  bool has_node(const Lattice& v) const;
};

/// Throws InvalidGenerator unless every generator preserves C[S] and is invariant under act.
ActionGraph build_action_graph(const std::vector<OreOperator>& gens, const std::vector<Lattice>& basis,
                               const AffineSemigroup2D& s, const TorusAction& act);

enum class Irreducibility { Irreducible, Reducible, Inconclusive };
enum class Decomposability { Indecomposable, Decomposable, Inconclusive };

std::string to_string(Irreducibility x);
std::string to_string(Decomposability x);

struct ModuleVerdict {
  Irreducibility irreducibility = Irreducibility::Inconclusive;
  Decomposability decomposability = Decomposability::Inconclusive;
  /// Nonempty proper subset closed under all edges (reducible case).
  std::vector<Lattice> closed_subset;
  /// Two nonempty parts with no edge between them (decomposable case).
  std::vector<Lattice> part_a, part_b;
  /// Joint eigenvalues of the diagonal witnesses, one tuple per node (certificate for monomial submodules).
  std::vector<std::vector<GaussRational>> separation;
  /// Set when compared against a larger truncation.
  std::optional<bool> stable;
  std::string note;

  /// "irreducible", "reducible, indecomposable", "decomposable" or "inconclusive".
  std::string status() const;
};

/// Graph verdict. Requires diagonal witnesses that lie in the algebra generated by the graph's
/// generators (checked on words of length <= 3) and separate the basis; otherwise inconclusive.
ModuleVerdict decide_structure(const ActionGraph& g, const std::vector<OreOperator>& diagonal_witness);

/// Independent re-check of a verdict's witnesses against the graph.
bool verify_verdict(const ActionGraph& g, const ModuleVerdict& v);

/// Multiplicity space at `truncation`, verdict, and a stability re-run at truncation + 5.
ModuleVerdict analyze_module(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                             const std::vector<OreOperator>& gens, const std::vector<OreOperator>& diagonal_witness,
                             Int truncation);

/// Inequivalence certificate via disjoint witness spectra; witnesses must lie in the generated algebra.
/// Throws Inconclusive when no witness separates distinct bases.
bool are_equivalent(const std::vector<Lattice>& basis_a, const std::vector<Lattice>& basis_b,
                    const std::vector<OreOperator>& gens, const std::vector<OreOperator>& diagonal_witness);

struct CommutativityResult {
  bool commutative = true;
  /// Generator indices of the first noncommuting pair of words (earlier word first).
  std::vector<std::size_t> word_a, word_b;
  /// commutator(word_a, word_b)
  OreOperator commutator;
};

/// Pairwise commutators of all generator words of length and order at most order_bound.
CommutativityResult is_commutative(const std::vector<OreOperator>& gens, unsigned order_bound);

/// Basis of the invariant operators with coefficients in the window and order <= order_bound that
/// commute with every generator.
std::vector<OreOperator> center_candidates(const std::vector<OreOperator>& gens, const TorusAction& act,
                                           const Window& window, unsigned order_bound, SecondMode mode);

/// Number of non-constant algebra generators needed for the span (products taken up to order_bound).
std::size_t count_center_generators(const std::vector<OreOperator>& center, unsigned order_bound);

struct SeparationResult {
  bool separated = false;
  /// Central character per weight, in input order.
  std::vector<std::pair<Weight, std::vector<GaussRational>>> characters;
};

/// Throws Inconclusive if some center element is not scalar on a truncated space.
SeparationResult character_separation(const std::vector<OreOperator>& center, const std::vector<Weight>& weights,
                                      const AffineSemigroup2D& s, const TorusAction& act, Int truncation);

struct DensityResult {
  std::size_t achieved = 0;
  std::size_t full = 0;

  bool dense() const { return achieved == full; }
};

/// Dimension of the span of all generator words of length <= word_length acting on the weight space.
/// Throws IncompleteSpace unless the space is finite and fits in the truncation.
DensityResult density_check(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                            const std::vector<OreOperator>& gens, unsigned word_length, Int truncation);

/// Z - chi(Z) for the first non-constant center element Z acting by a scalar; verified on the basis.
/// Throws NoWitness for rank-zero actions or when no center element works.
OreOperator annihilator_witness(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                                const std::vector<OreOperator>& center, Int truncation);

}  // namespace invdiff
