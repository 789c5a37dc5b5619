#pragma once

#include <string>
#include <vector>

#include "feyntope/intlin.hpp"
#include "feyntope/rational.hpp"
#include "feyntope/symanzik.hpp"

namespace feyntope {

// Point set A in Z^{n+1}.  Raw sets carry (1, S) / (0, T) tags in the
// first coordinate; after the reduction r every first coordinate is 1.
struct LatticeSet {
  int n = 0;                         // ambient projective dimension
  std::vector<IVec> points;          // each of length n+1, no duplicates
  std::vector<std::string> labels;   // parallel to points
  bool reduced = false;
  // False when the reduced points do not generate Z^{n+1} (possible with
  // dropped massless monomials); rank-based claims are then inapplicable.
  bool generates_lattice = true;

  int size() const { return static_cast<int>(points.size()); }
  int index_of(const IVec& p) const;
};

// An integer relation sum_a n_a * a = 0, coefficients indexed per point.
struct IntegerRelation {
  std::vector<Int> coeff;
};

struct GkzSystem {
  std::vector<IntegerRelation> box_operators;
  IntMat euler;   // (n+1) x |A|, entry phi_i(a)
  RatVec beta;    // length n+1
};

// Points (1, S) from Psi monomials and (0, T) from Q monomials.  All lie
// on the hyperplane where the coordinates sum to ell+1.
LatticeSet build_point_set(const GradedPolynomial& psi, const GradedPolynomial& q);

// Applies r: first coordinate becomes the coordinate sum over ell+1, the
// rest stay.  Afterwards every point has first coordinate 1.  Also runs
// the Z^{n+1}-generation check and records the outcome.
LatticeSet reduce_lattice(const LatticeSet& raw, int ell);

// Z-basis of the integer kernel of the point matrix.
std::vector<IntegerRelation> relation_basis(const LatticeSet& a);

GkzSystem gkz_system(const LatticeSet& a, const RatVec& beta);

// beta = (-D/2, -1, ..., -1) in Q^{n+1}.
RatVec amplitude_beta(const Rat& d_half, int n);

// n! times the Euclidean volume of conv(A) projected to the last n
// coordinates.  Degenerate (lower-dimensional) configurations yield 0
// and set *degenerate.
Int normalized_volume(const LatticeSet& a, bool* degenerate = nullptr);

}  // namespace feyntope
