#include "feyntope/gamma_series.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include <cmath>

#include "feyntope/eps_rational.hpp"
#include "feyntope/errors.hpp"

namespace feyntope {

namespace {

bool is_nonpositive_integer(const Rat& q) {
  return q <= 0 && boost::multiprecision::denominator(q) == 1;
}

Int rat_floor(const Rat& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  Int f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

std::vector<double> series_exp(const std::vector<double>& a) {
  // exp of a series with a[0] == 0, via k e_k = sum j a_j e_{k-j}
  std::vector<double> e(a.size(), 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    double s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b,
                               std::size_t len) {
  std::vector<double> c(len, 0.0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<double> series_div(const std::vector<double>& p, const std::vector<double>& q,
                               std::size_t len) {
  std::vector<double> c(len, 0.0);
  for (std::size_t k = 0; k < len; ++k) {
    double s = k < p.size() ? p[k] : 0.0;
    for (std::size_t j = 0; j < k; ++j)
      if (k - j < q.size()) s -= c[j] * q[k - j];
    c[k] = s / q[0];
  }
  return c;
}

}  // namespace

GammaFactorSeries gamma_factor_series(const Rat& q, const Rat& s, int terms) {
  if (terms < 1) terms = 1;
  GammaFactorSeries out;
  if (s == 0) {
    if (is_nonpositive_integer(q))
      throw ValidationError("Gamma evaluated at a nonpositive integer with no eps direction");
    out.coeff.assign(terms, 0.0);
    out.coeff[0] = boost::math::tgamma(to_double(q));
    out.abs_err = 1e-15 * std::abs(out.coeff[0]);
    return out;
  }

  // shift the base point into [1,2): Gamma(q+se) = R(e) * Gamma(z0+se)
  const Int m = 1 - rat_floor(q);
  const Rat z0 = q + Rat(m);
  EpsRational rational_part = EpsRational::one();
  if (m > 0) {
    for (Int j = 0; j < m; ++j) rational_part.div_factor(q + Rat(j), s);
  } else {
    EpsPoly prod = EpsPoly::one();
    for (Int j = m; j < 0; ++j) prod = prod * EpsPoly(q + Rat(j), s);
    rational_part.mul_poly(prod);
  }

  // valuation of the exact part: each factor with q+j = 0 is a bare eps
  const int val =
      rational_part.num().valuation() - rational_part.denominator_poly().valuation();
  std::vector<Rat> exact = rational_part.laurent(val, val + terms - 1);

  // analytic factor at z0 in [1,2)
  const double z = to_double(z0);
  const double sd = to_double(s);
  std::vector<double> lng(terms, 0.0);
  double spow = sd;
  double fact = 1.0;
  for (int k = 1; k < terms; ++k) {
    fact *= k;
    const double psi = k == 1 ? boost::math::digamma(z) : boost::math::polygamma(k - 1, z);
    lng[k] = psi * spow / fact;
    spow *= sd;
  }
  std::vector<double> unit = series_exp(lng);
  const double g0 = boost::math::tgamma(z);
  for (auto& c : unit) c *= g0;

  std::vector<double> exact_d(terms);
  for (int i = 0; i < terms; ++i) exact_d[i] = to_double(exact[i]);
  out.valuation = val;
  out.coeff = series_mul(exact_d, unit, terms);
  double scale = 0;
  for (double c : out.coeff) scale = std::max(scale, std::abs(c));
  out.abs_err = 1e-13 * (1.0 + scale);
  return out;
}

LaurentSeries gamma_ratio_series(const Rat& d_half, const Rat& u0, int ell, int n, int max_deg,
                                 bool include_pi_power) {
  const Rat qn = d_half;
  const Rat qd = Rat(-n) + d_half * (ell + 1);
  LaurentSeries out;
  if (is_nonpositive_integer(qn) && is_nonpositive_integer(qd))
    out.note = "both Gamma arguments sit at nonpositive integers; poles cancelled exactly";

  // enough unit-part terms to cover [val, max_deg]
  GammaFactorSeries num = gamma_factor_series(qn, u0, 1);
  GammaFactorSeries den = gamma_factor_series(qd, u0 * (ell + 1), 1);
  const int val = num.valuation - den.valuation;
  const int terms = std::max(1, max_deg - val + 1);
  num = gamma_factor_series(qn, u0, terms);
  den = gamma_factor_series(qd, u0 * (ell + 1), terms);

  std::vector<double> ratio = series_div(num.coeff, den.coeff, terms);
  if (include_pi_power) {
    const double lp = std::log(boost::math::constants::pi<double>());
    std::vector<double> expo(terms, 0.0);
    if (terms > 1) expo[1] = to_double(u0) * ell * lp;
    std::vector<double> pi_series = series_exp(expo);
    const double lead = std::pow(boost::math::constants::pi<double>(), to_double(d_half) * ell);
    for (auto& c : pi_series) c *= lead;
    ratio = series_mul(ratio, pi_series, terms);
  }

  double scale = 0;
  for (double c : ratio) scale = std::max(scale, std::abs(c));
  const double err = 1e-13 * (1.0 + scale);
  for (int k = 0; k < terms; ++k) {
    const int deg = val + k;
    if (deg > max_deg) break;
    out.coefficients[deg] = {ratio[k], err};
  }
  return out;
}

}  // namespace feyntope
