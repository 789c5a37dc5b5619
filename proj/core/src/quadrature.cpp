#include "feyntope/quadrature.hpp"

#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace feyntope {

namespace {

int refinements_for_budget(int n, long long max_evals) {
  // a refinement level r costs roughly 2^{r+4} points per axis
  int r = 12;
  auto cost = [&](int lv) {
    double per_axis = std::pow(2.0, lv + 4);
    return std::pow(per_axis, n);
  };
  while (r > 5 && cost(r) > static_cast<double>(max_evals)) --r;
  return r;
}

}  // namespace

QuadResult integrate_rn(const RealFn& f, int n, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n < 0 || n > 3) throw ValidationError("tensor quadrature supports n <= 3 only");
  QuadResult res;
  if (n == 0) {
    res.value = f({});
    res.evals = 1;
    return res;
  }
  const int refinements = refinements_for_budget(n, cfg.max_evals);
  const double inner_tol = cfg.rel_tol * 0.1;
  long long evals = 0;
  double worst_outer_err = 0;

  std::vector<double> x(n, 0.0);
  std::function<double(int, double)> level = [&](int k, double tol) -> double {
    boost::math::quadrature::sinh_sinh<double> integ(refinements);
    double err = 0, l1 = 0;
    double v = integ.integrate(
        [&](double t) {
          x[k] = t;
          if (k + 1 == n) {
            ++evals;
            return f(x);
          }
          return level(k + 1, inner_tol);
        },
        tol, &err, &l1);
    if (k == 0) worst_outer_err = err;
    return v;
  };

  try {
    res.value = level(0, cfg.rel_tol);
  } catch (const std::exception&) {
    res.converged = false;
    res.abs_error = std::numeric_limits<double>::infinity();
    res.evals = evals;
    return res;
  }
  res.evals = evals;
  // outer reported error plus the inner tolerance smeared over the
  // result, floored at the rounding scale of the node sums
  res.abs_error = worst_outer_err + (n > 1 ? 3.0 * inner_tol * std::abs(res.value) : 0.0);
  res.abs_error = std::max(res.abs_error,
                           50 * std::numeric_limits<double>::epsilon() * std::abs(res.value));
  const double target = std::max(cfg.rel_tol * std::abs(res.value), cfg.abs_tol);
  res.converged = res.abs_error <= std::max(target, 1e-300) ||
                  res.abs_error <= 10 * cfg.rel_tol * std::abs(res.value);
  return res;
}

namespace {

QuadResult integrate_cube_impl(const RealFn& f, const std::vector<double>& lo,
                               const std::vector<double>& hi, const QuadratureConfig& cfg) {
  const int n = static_cast<int>(lo.size());
  QuadResult res;
  if (n == 0) {
    res.value = f({});
    res.evals = 1;
    return res;
  }
  const int refinements = refinements_for_budget(n, cfg.max_evals);
  const double inner_tol = cfg.rel_tol * 0.1;
  long long evals = 0;
  double worst_outer_err = 0;

  std::vector<double> x(n, 0.0);
  std::function<double(int, double)> level = [&](int k, double tol) -> double {
    boost::math::quadrature::tanh_sinh<double> integ(refinements);
    double err = 0, l1 = 0;
    std::size_t levels = 0;
    double v = integ.integrate(
        [&](double t) {
          x[k] = t;
          if (k + 1 == n) {
            ++evals;
            return f(x);
          }
          return level(k + 1, inner_tol);
        },
        lo[k], hi[k], tol, &err, &l1, &levels);
    if (k == 0) worst_outer_err = err * std::max(l1, std::abs(v));
    return v;
  };

  try {
    res.value = level(0, cfg.rel_tol);
  } catch (const std::exception&) {
    res.converged = false;
    res.abs_error = std::numeric_limits<double>::infinity();
    res.evals = evals;
    return res;
  }
  res.evals = evals;
  res.abs_error = worst_outer_err + (n > 1 ? 3.0 * inner_tol * std::abs(res.value) : 0.0);
  res.abs_error = std::max(res.abs_error,
                           50 * std::numeric_limits<double>::epsilon() * std::abs(res.value));
  const double target = std::max(cfg.rel_tol * std::abs(res.value), cfg.abs_tol);
  res.converged = res.abs_error <= std::max(target, 1e-300) ||
                  res.abs_error <= 10 * cfg.rel_tol * std::abs(res.value);
  return res;
}

}  // namespace

QuadResult integrate_unit_cube(const RealFn& f, int n, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n < 0 || n > 3) throw ValidationError("tensor quadrature supports n <= 3 only");
  return integrate_cube_impl(f, std::vector<double>(n, 0.0), std::vector<double>(n, 1.0), cfg);
}

QuadResult integrate_box(const RealFn& f, const std::vector<double>& lo,
                         const std::vector<double>& hi, const QuadratureConfig& cfg) {
  cfg.validate();
  if (lo.size() != hi.size() || lo.size() > 3)
    throw ValidationError("box quadrature supports n <= 3 only");
  return integrate_cube_impl(f, lo, hi, cfg);
}

std::vector<std::vector<double>> cholesky_damped(std::vector<std::vector<double>> h) {
  const int n = static_cast<int>(h.size());
  double scale = 1e-12;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(h[i][i]));
  double damp = 0;
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j <= i && ok; ++j) {
        double s = h[i][j] + (i == j ? damp : 0.0);
        for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
        if (i == j) {
          if (s <= scale * 1e-14) {
            ok = false;
            break;
          }
          l[i][i] = std::sqrt(s);
        } else {
          l[i][j] = s / l[j][j];
        }
      }
    }
    if (ok) return l;
    damp = damp == 0 ? scale * 1e-10 : damp * 10;
  }
  throw Error("Hessian could not be made positive definite");
}

std::vector<double> cholesky_solve(const std::vector<std::vector<double>>& l,
                                   std::vector<double> b) {
  const int n = static_cast<int>(l.size());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= l[i][k] * b[k];
    b[i] /= l[i][i];
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) b[i] -= l[k][i] * b[k];
    b[i] /= l[i][i];
  }
  return b;
}

CenterInfo find_center(const Smooth& target, int n) {
  std::vector<double> x(n, 0.0);
  double fx = target.value(x);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<double> g = target.gradient(x);
    double gn = 0;
    for (double v : g) gn = std::max(gn, std::abs(v));
    if (gn < 1e-11 * (1.0 + std::abs(fx))) break;
    auto h = target.hessian(x);
    std::vector<double> step;
    try {
      step = cholesky_solve(cholesky_damped(h), g);
    } catch (const Error&) {
      step = g;  // gradient fallback
    }
    // descent check, then backtracking
    double t = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt, t *= 0.5) {
      std::vector<double> xn(n);
      for (int i = 0; i < n; ++i) xn[i] = x[i] - t * step[i];
      double fn = target.value(xn);
      if (std::isfinite(fn) && fn < fx) {
        x = std::move(xn);
        fx = fn;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  CenterInfo info;
  info.x = x;
  info.chol = cholesky_damped(target.hessian(x));
  return info;
}

QuadResult integrate_mc(const RealFn& f, const std::vector<double>& center,
                        const std::vector<std::vector<double>>& chol, double t_dof,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(center.size());
  double log_det_l = 0;
  for (int i = 0; i < n; ++i) log_det_l += std::log(chol[i][i]);
  const double log_cnu = boost::math::lgamma((t_dof + n) / 2.0) -
                         boost::math::lgamma(t_dof / 2.0) -
                         0.5 * n * std::log(t_dof * boost::math::constants::pi<double>());

  constexpr long long kBatch = 8192;
  std::vector<double> batch_means;
  QuadResult res;

  auto run_batch = [&](std::uint64_t index) {
    std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::gamma_distribution<double> gamma_d(t_dof / 2.0, 2.0);
    double sum = 0;
    std::vector<double> t(n), x(n);
    for (long long s = 0; s < kBatch; ++s) {
      double g = gamma_d(rng);
      while (g <= 0) g = gamma_d(rng);
      const double mult = std::sqrt(t_dof / g);
      double t2 = 0;
      for (int i = 0; i < n; ++i) {
        t[i] = normal(rng) * mult;
        t2 += t[i] * t[i];
      }
      // x = center + L^{-T} t
      std::vector<double> y = t;
      for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) y[i] -= chol[k][i] * y[k];
        y[i] /= chol[i][i];
      }
      for (int i = 0; i < n; ++i) x[i] = center[i] + y[i];
      const double log_q =
          log_cnu - 0.5 * (t_dof + n) * std::log1p(t2 / t_dof) + log_det_l;
      sum += f(x) * std::exp(-log_q);
    }
    return sum / kBatch;
  };

  const long long max_batches = std::max<long long>(8, cfg.max_evals / kBatch);
  while (static_cast<long long>(batch_means.size()) < max_batches) {
    const std::size_t round = 16;
    for (std::size_t r = 0; r < round; ++r)
      batch_means.push_back(run_batch(batch_means.size()));
    double mean = 0;
    for (double m : batch_means) mean += m;
    mean /= batch_means.size();
    double var = 0;
    for (double m : batch_means) var += (m - mean) * (m - mean);
    var /= batch_means.size() * (batch_means.size() - 1.0);
    res.value = mean;
    res.abs_error = 3.0 * std::sqrt(var);
    res.evals = static_cast<long long>(batch_means.size()) * kBatch;
    const double target = std::max(cfg.rel_tol * std::abs(mean), cfg.abs_tol);
    if (res.abs_error <= target && batch_means.size() >= 32) {
      res.converged = true;
      return res;
    }
  }
  res.converged = false;
  return res;
}

}  // namespace feyntope
