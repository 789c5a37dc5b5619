#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feyntope/graph.hpp"
#include "feyntope/lattice.hpp"
#include "feyntope/rational.hpp"

namespace feyntope {

// Inward facet normal of the cone C_A: <w, a> >= 0 for every a in A.
struct FacetNormal {
  enum class Source { subgraph, self_loop, upper, hull };
  IVec w;
  Source source = Source::hull;
  std::vector<int> edge_indices;  // provenance for subgraph / self_loop

  bool operator==(const FacetNormal& o) const { return w == o.w; }
};

// Facet description of P_Gamma straight from the graph: gamma = (-ell_gamma,
// 1_gamma) for every 2-connected self-loop-free subgraph, (-1, 1_e) for
// every self-loop (the x_e >= 1 wall), and the upper wall (ell+1, -1...-1).
std::vector<FacetNormal> facet_normals(const Graph& g);

// The same facets from the point set alone, by exact convex hull (double
// description).  Oracle route for the combinatorial description, and the
// fallback when dropped monomials shrink A below the full polytope.
std::vector<FacetNormal> brute_force_facets(const LatticeSet& a);

struct ConePosition {
  enum class Kind { interior, boundary, exterior };
  Kind kind = Kind::interior;
  // facets with nonpositive pairing; zero pairings for boundary,
  // negative ones witness exteriority
  std::vector<std::pair<FacetNormal, Rat>> witnesses;
};

ConePosition cone_position(const RatVec& alpha, const std::vector<FacetNormal>& normals);

struct SemiNonResonance {
  bool semi_nonresonant = true;
  // when resonant: the facet normal and the semigroup element sigma with
  // <w, -beta + sigma> = 0
  std::optional<FacetNormal> witness_normal;
  Int witness_sigma_pairing = 0;
};

// beta is semi non-resonant when no facet pairing of -beta + Sigma
// vanishes, Sigma the semigroup generated by A.  Membership of <w, beta>
// in the numerical semigroup of the pairings <w, a> is decided by dynamic
// programming.
SemiNonResonance semi_nonresonant(const RatVec& beta, const std::vector<FacetNormal>& normals,
                                  const LatticeSet& a);

struct PoleWitness {
  std::vector<std::string> edges;
  int loops = 0;
  int edge_count = 0;
  Int value;  // D/2 * ell_gamma - |E(gamma)|, a nonnegative integer
  bool self_loop = false;
};

struct ConvergenceReport {
  bool converges = false;
  bool self_loop_divergent = false;
  Rat overall_check;  // <upper normal, alpha> = D/2 (ell+1) - |E|, needs > 0
  std::vector<std::pair<FacetNormal, Rat>> violations;
  std::vector<PoleWitness> pole_witnesses;
};

// Convergence of the dimensionally regularized amplitude at D/2 = d_half
// and the predicted pole locus: a pole witness is a 2-connected subgraph
// with D/2 ell_gamma - |E(gamma)| a nonnegative integer.  Any self-loop
// is reported as unconditional divergence.
ConvergenceReport amplitude_pole_report(const Graph& g, const Rat& d_half);

}  // namespace feyntope
