#pragma once

#include <map>
#include <string>
#include <vector>

#include "feyntope/eps_rational.hpp"
#include "feyntope/lattice.hpp"
#include "feyntope/polytope.hpp"
#include "feyntope/rational.hpp"

namespace feyntope {

// alpha + eps*u with exact rational entries; u may be zero.
struct AffineAlpha {
  RatVec base;
  RatVec dir;

  // pairing <w, base + eps dir> as a linear polynomial in eps
  EpsPoly pairing(const IVec& w) const { return EpsPoly(dot(w, base), dot(w, dir)); }
  EpsPoly alpha0() const { return EpsPoly(base[0], dir[0]); }
};

struct ContiguityTerm {
  EpsRational coefficient;
  int point = 0;  // index into the lattice set
  AffineAlpha alpha;
};

// One application of the contiguity identity
//   <w, alpha> K(alpha) = alpha_0 sum_a <w, a> P_a K(alpha + a):
// K(alpha+eps u) = sum over a with <w,a> > 0 of
//   [alpha_0(eps) <w,a> / <w, alpha+eps u>] P_a K(alpha + a + eps u).
// Throws ResonantError when <w, alpha+eps u> vanishes identically.
std::vector<ContiguityTerm> contiguity_step(const AffineAlpha& alpha, const FacetNormal& w,
                                            const LatticeSet& a);

// One summand of the fully reduced expansion.
struct ReductionTerm {
  EpsRational coefficient;
  std::map<std::string, int> monomial;  // coefficient label -> P_a exponent
  AffineAlpha alpha;                    // base strictly interior
};

struct ReductionResult {
  std::vector<ReductionTerm> terms;
  int pole_order_bound = 0;
  int steps = 0;
};

// Repeats contiguity steps until every leaf base is strictly interior to
// the cone, merging like terms keyed on (leaf alpha, P-monomial).  The
// facet to step through is the one with the most negative base pairing,
// ties broken lexicographically on w.
ReductionResult reduce_to_interior(const AffineAlpha& alpha, const LatticeSet& a,
                                   const std::vector<FacetNormal>& normals,
                                   int max_steps = 100000);

}  // namespace feyntope
