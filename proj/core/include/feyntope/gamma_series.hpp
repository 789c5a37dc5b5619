#pragma once

#include <map>
#include <string>
#include <utility>

#include "feyntope/rational.hpp"

namespace feyntope {

// Laurent series in eps with float coefficients and per-coefficient
// absolute error estimates.
struct LaurentSeries {
  std::map<int, std::pair<double, double>> coefficients;  // degree -> (value, abs_error)
  std::string note;

  int min_degree() const { return coefficients.empty() ? 0 : coefficients.begin()->first; }
  int max_degree() const { return coefficients.empty() ? -1 : coefficients.rbegin()->first; }
  double value(int deg) const {
    auto it = coefficients.find(deg);
    return it == coefficients.end() ? 0.0 : it->second.first;
  }
  double error(int deg) const {
    auto it = coefficients.find(deg);
    return it == coefficients.end() ? 0.0 : it->second.second;
  }
};

// Laurent series of Gamma(q + s*eps) about eps = 0: valuation shift plus
// coefficients of the unit part.  Gamma poles at nonpositive integers are
// pulled back exactly through Gamma(z+1) = z Gamma(z) to a base point in
// [1,2); only the log-Gamma Taylor coefficients there are floating point.
struct GammaFactorSeries {
  int valuation = 0;              // power of eps carried by the factor
  std::vector<double> coeff;      // unit part, coeff[0] != 0
  double abs_err = 0;
};

GammaFactorSeries gamma_factor_series(const Rat& q, const Rat& s, int terms);

// Series of Gamma(alpha0(eps)) / Gamma(-n + alpha0(eps)(ell+1)) with
// alpha0(eps) = d_half + u0*eps, the prefactor relating K((D/2,1..1)) to
// the parametric amplitude integral.  With include_pi_power also
// multiplies by pi^{alpha0(eps) * ell}, the eps-dependence expanded
// through log(pi).
LaurentSeries gamma_ratio_series(const Rat& d_half, const Rat& u0, int ell, int n, int max_deg,
                                 bool include_pi_power = false);

}  // namespace feyntope
