#pragma once

#include <map>
#include <string>
#include <vector>

#include "feyntope/graph.hpp"
#include "feyntope/lattice.hpp"
#include "feyntope/polytope.hpp"
#include "feyntope/quadrature.hpp"
#include "feyntope/symanzik.hpp"

namespace feyntope {

// Values P_a of the coefficient variables, keyed by lattice-point label.
// All strictly positive: the integrand denominator must not vanish on the
// closure of the positive orthant.
struct KinematicPoint {
  std::map<std::string, Rat> assignment;

  Rat at(const std::string& label) const;
  void validate() const;
};

// The amplitude assignment: P_S and Q_T read off the polynomials.
KinematicPoint kinematic_point_from(const GradedPolynomial& psi, const GradedPolynomial& q);

// Evaluator for K(alpha, P) = int over R^n_+ of t^alpha~ / f^alpha_0 dt/t,
// f = sum_a P_a t^a~, in exponential coordinates.  Centers the integrand
// at the maximizer of its log (a convex problem) and rescales by the
// Cholesky factor of the Hessian there, then tensor DE quadrature for
// n <= 3 or Student-t importance-sampled Monte Carlo.
class KEvaluator {
 public:
  KEvaluator(const LatticeSet& a, const KinematicPoint& p, std::vector<FacetNormal> normals,
             QuadratureConfig cfg);

  // K at exact rational alpha; verifies strict interiority first.
  QuadResult integral(const RatVec& alpha) const;

  // k-th Taylor coefficient of eps -> K(base + eps*dir, P) at 0, by
  // quadrature of the log-weighted integrand
  //   (1/k!) (<u~, x> - u_0 log f(x))^k  times the base integrand.
  QuadResult taylor_coeff(const RatVec& base, const RatVec& dir, int k) const;

  const std::vector<FacetNormal>& normals() const { return normals_; }
  const LatticeSet& lattice() const { return a_; }
  const QuadratureConfig& config() const { return cfg_; }

 private:
  QuadResult weighted_integral(const RatVec& base, const std::vector<double>& ut, double u0,
                               int k) const;

  LatticeSet a_;
  std::vector<FacetNormal> normals_;
  QuadratureConfig cfg_;
  std::vector<std::vector<double>> pts_;  // a~ per point
  std::vector<double> logp_;              // log P_a per point
};

// Convenience forms matching the operation contracts (facets computed
// from the point set when not supplied).
QuadResult k_integral(const RatVec& alpha, const KinematicPoint& p, const LatticeSet& a,
                      const QuadratureConfig& cfg);
QuadResult k_taylor_coeff(const RatVec& base, const RatVec& dir, const KinematicPoint& p,
                          const LatticeSet& a, int k, const QuadratureConfig& cfg);

// J(c,d,P,v) = int over the standard simplex of Q^c Psi^{-d} t^v Omega,
// in the chart t_n = 1 - sum t_i.  Components of v must stay > -1.
QuadResult j_integral(double c, double d, const GradedPolynomial& psi,
                      const GradedPolynomial& q, const KinematicPoint& p,
                      const std::vector<double>& v, const QuadratureConfig& cfg);

// I(c1,c2,P,v) = int over R^n_+ of e^{-Q/Psi} Q^{c1} Psi^{-c2} t^v dt,
// evaluated directly (exponential substitution).  c1 = 0, c2 = D/2, v = 0
// is the parametric amplitude integrand.
QuadResult i_integral(double c1, double c2, const GradedPolynomial& psi,
                      const GradedPolynomial& q, const KinematicPoint& p,
                      const std::vector<double>& v, const QuadratureConfig& cfg);

// Same integral restricted to the box [10^-k, 10^k]^n; used to watch a
// divergent case grow.
QuadResult i_integral_box(double c1, double c2, const GradedPolynomial& psi,
                          const GradedPolynomial& q, const KinematicPoint& p, double k_decade,
                          const QuadratureConfig& cfg);

// Direct momentum-space amplitude over H_1(Gamma, R^D) with the measure
// normalized so an integral cycle basis spans a unit cell.  Oracle-scale
// only: D * loop_number <= 6, convergent inputs.
QuadResult momentum_space_amplitude(const Graph& g, const QuadratureConfig& cfg);

}  // namespace feyntope
