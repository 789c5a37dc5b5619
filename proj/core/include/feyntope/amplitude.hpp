#pragma once

#include "feyntope/continuation.hpp"
#include "feyntope/gamma_series.hpp"
#include "feyntope/integrals.hpp"

namespace feyntope {

// Everything the evaluation pipeline derives from a graph once.
struct AmplitudePipeline {
  Graph graph;
  GradedPolynomial psi, q;
  std::vector<ExpVec> dropped;          // Q monomials lost to zero coefficients
  LatticeSet lattice;                   // reduced
  std::vector<FacetNormal> normals;
  bool hull_normals = false;            // true when the combinatorial facet
                                        // description does not apply (dropped
                                        // monomials) and the exact hull is used
  KinematicPoint kinematics;
};

AmplitudePipeline build_pipeline(const Graph& g);

struct AmplitudeExpansion {
  LaurentSeries series;       // eps-expansion of I(0, D/2+eps, P, 0)
  LaurentSeries gamma_series; // the Gamma-ratio prefactor alone
  ReductionResult reduction;  // exact contiguity data behind the series
  bool all_converged = true;  // every leaf quadrature hit its tolerance
};

// eps-expansion of I(0, D/2+eps, P_a, 0) =
//   Gamma(D/2+eps)/Gamma(-n + (D/2+eps)(ell+1)) * K((D/2+eps, 1...1), P_a)
// assembled as (Gamma-ratio series) x sum of (exact Laurent of each
// contiguity coefficient) x (Taylor series of the leaf K's, by
// quadrature).  Truncated at `order`; leaf evaluations run in parallel
// and are reduced in a fixed order.
AmplitudeExpansion assemble_amplitude_expansion(const Graph& g, const Rat& d_half, int order,
                                                const QuadratureConfig& cfg);

// Same, reusing a prepared pipeline and evaluator.
AmplitudeExpansion assemble_amplitude_expansion(const AmplitudePipeline& pipe,
                                                const KEvaluator& eval, const Rat& d_half,
                                                int order);

// K(alpha + eps u) evaluated at one numeric eps through the reduction
// identity: coefficients at eps, leaves by quadrature.  Cross-check hook
// for the exact-to-numeric bridge.
QuadResult evaluate_reduction_at(const ReductionResult& red, const KEvaluator& eval,
                                 const KinematicPoint& p, const Rat& eps);

}  // namespace feyntope
