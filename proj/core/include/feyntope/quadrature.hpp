#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "feyntope/errors.hpp"

namespace feyntope {

struct QuadratureConfig {
  enum class Method { tensor, montecarlo };
  Method method = Method::tensor;
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  long long max_evals = 200'000'000;
  std::uint64_t seed = 20240915;

  void validate() const {
    if (rel_tol <= 0 || abs_tol < 0) throw ValidationError("quadrature tolerances must be positive");
  }
};

struct QuadResult {
  double value = 0;
  double abs_error = 0;
  bool converged = true;
  long long evals = 0;
};

using RealFn = std::function<double(const std::vector<double>&)>;

// Tensor quadrature over R^n by nested double-exponential (sinh-sinh)
// rules; deterministic, n <= 3.
QuadResult integrate_rn(const RealFn& f, int n, const QuadratureConfig& cfg);

// Tensor quadrature over the open unit cube (0,1)^n by nested tanh-sinh
// rules (endpoint singularities allowed); deterministic, n <= 3.
QuadResult integrate_unit_cube(const RealFn& f, int n, const QuadratureConfig& cfg);

// Tensor quadrature over a finite box, nested tanh-sinh.
QuadResult integrate_box(const RealFn& f, const std::vector<double>& lo,
                         const std::vector<double>& hi, const QuadratureConfig& cfg);

// Importance-sampled Monte Carlo over R^n with a multivariate Student-t
// proposal centered at `center` with scale matrix chol^{-T} (chol a lower
// Cholesky factor of the target Hessian).  Batched; the error estimate is
// three standard errors of the batch means; reproducible for a fixed seed.
QuadResult integrate_mc(const RealFn& f, const std::vector<double>& center,
                        const std::vector<std::vector<double>>& chol, double t_dof,
                        const QuadratureConfig& cfg);

// Damped Newton minimizer for smooth functions R^n -> R with analytic
// gradient and Hessian; used to center integrands before quadrature.
struct Smooth {
  std::function<double(const std::vector<double>&)> value;
  std::function<std::vector<double>(const std::vector<double>&)> gradient;
  std::function<std::vector<std::vector<double>>(const std::vector<double>&)> hessian;
};

struct CenterInfo {
  std::vector<double> x;                      // approximate minimizer
  std::vector<std::vector<double>> chol;      // lower Cholesky of the Hessian there
};

CenterInfo find_center(const Smooth& target, int n);

// Lower Cholesky with additive damping until positive definite.
std::vector<std::vector<double>> cholesky_damped(std::vector<std::vector<double>> h);

// Solve L L^T x = b given lower-triangular L.
std::vector<double> cholesky_solve(const std::vector<std::vector<double>>& chol,
                                   std::vector<double> b);

}  // namespace feyntope
