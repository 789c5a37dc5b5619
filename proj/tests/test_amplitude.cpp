#include <doctest.h>

#include <cmath>

#include "feyntope/amplitude.hpp"

using namespace feyntope;

TEST_CASE("pipeline wiring: bubble") {
  auto pipe = build_pipeline(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  CHECK(pipe.lattice.size() == 5);
  CHECK(pipe.normals.size() == 4);
  CHECK_FALSE(pipe.hull_normals);
  CHECK(pipe.dropped.empty());

  auto massless = build_pipeline(make_bubble(Rat(0), Rat(0), {Rat(1)}));
  CHECK(massless.lattice.size() == 3);
  CHECK(massless.hull_normals);  // dropped monomials force the hull route
}

TEST_CASE("single edge at D = 2 is exactly 1/2 at every order") {
  // I(0, 1+eps) = (1+eps) K((2+eps,1)) with K = 1/2 * 1/(1+eps)
  auto g = make_single_edge(Rat(1), {Rat(1)});
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  auto amp = assemble_amplitude_expansion(g, Rat(1), 2, cfg);
  CHECK(amp.all_converged);
  CHECK(amp.reduction.pole_order_bound == 1);
  CHECK(amp.series.min_degree() >= 0);
  CHECK(amp.series.value(0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(amp.series.value(1)) < 1e-8);
  CHECK(std::abs(amp.series.value(2)) < 1e-8);
}

TEST_CASE("bubble at D = 3 has no pole and matches direct quadrature") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  auto amp = assemble_amplitude_expansion(g, Rat(3, 2), 2, cfg);
  CHECK(amp.all_converged);
  CHECK(amp.reduction.pole_order_bound == 0);
  CHECK(amp.series.min_degree() == 0);

  auto pipe = build_pipeline(g);
  auto direct = i_integral(0.0, 1.5, pipe.psi, pipe.q, pipe.kinematics, {0.0, 0.0}, cfg);
  CHECK(amp.series.value(0) == doctest::Approx(direct.value).epsilon(1e-7));
}

TEST_CASE("bubble at D = 4: simple pole, series matches direct quadrature") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  auto amp = assemble_amplitude_expansion(g, Rat(2), 2, cfg);
  CHECK(amp.all_converged);
  CHECK(amp.reduction.pole_order_bound == 1);
  CHECK(amp.series.min_degree() == -1);
  CHECK(amp.series.min_degree() >= -g.edge_count());
  CHECK(amp.series.value(-1) != 0);

  auto pipe = build_pipeline(g);
  for (double eps : {-0.1, -0.05}) {
    double series_val = 0;
    for (const auto& [deg, cv] : amp.series.coefficients)
      series_val += cv.first * std::pow(eps, deg);
    auto direct = i_integral(0.0, 2.0 + eps, pipe.psi, pipe.q, pipe.kinematics, {0.0, 0.0}, cfg);
    CHECK(series_val == doctest::Approx(direct.value).epsilon(1e-4));
  }
}

TEST_CASE("lowest coefficient is reproduced after an extra u = 0 contiguity step") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  auto pipe = build_pipeline(g);
  KEvaluator eval(pipe.lattice, pipe.kinematics, pipe.normals, cfg);

  AffineAlpha alpha;
  alpha.base = {Rat(2), Rat(1), Rat(1)};
  alpha.dir = {Rat(1), Rat(0), Rat(0)};
  auto red = reduce_to_interior(alpha, pipe.lattice, pipe.normals);

  // K_{-1} = sum_j res_j P^{m_j} K(leaf_j)
  auto lowest = [&](bool extra_step) {
    double total = 0, err = 0;
    for (const auto& t : red.terms) {
      Rat res = t.coefficient.laurent(-1, -1)[0];
      Rat mono(1);
      for (const auto& [label, k] : t.monomial)
        for (int i = 0; i < k; ++i) mono *= pipe.kinematics.at(label);
      double leaf_val = 0, leaf_err = 0;
      if (!extra_step) {
        auto r = eval.integral(t.alpha.base);
        leaf_val = r.value;
        leaf_err = r.abs_error;
      } else {
        // rewrite each leaf by one contiguity step in a u = 0 direction
        AffineAlpha frozen{t.alpha.base, RatVec(t.alpha.base.size(), Rat(0))};
        const FacetNormal& w = pipe.normals.back();
        for (const auto& child : contiguity_step(frozen, w, pipe.lattice)) {
          auto r = eval.integral(child.alpha.base);
          const double c = to_double(child.coefficient.eval(Rat(0)) *
                                     pipe.kinematics.at(pipe.lattice.labels[child.point]));
          leaf_val += c * r.value;
          leaf_err += std::abs(c) * r.abs_error;
        }
      }
      total += to_double(res * mono) * leaf_val;
      err += std::abs(to_double(res * mono)) * leaf_err;
    }
    return std::pair(total, err);
  };
  auto [plain, err1] = lowest(false);
  auto [stepped, err2] = lowest(true);
  CHECK(std::abs(plain - stepped) <= 10 * (err1 + err2));
}

TEST_CASE("massless bubble runs through the hull-normal route") {
  auto g = make_bubble(Rat(0), Rat(0), {Rat(1)});
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;

  // D = 3: finite, against direct quadrature
  auto amp3 = assemble_amplitude_expansion(g, Rat(3, 2), 0, cfg);
  auto pipe = build_pipeline(g);
  auto direct = i_integral(0.0, 1.5, pipe.psi, pipe.q, pipe.kinematics, {0.0, 0.0}, cfg);
  CHECK(amp3.series.value(0) == doctest::Approx(direct.value).epsilon(1e-7));

  // D = 4: I(0, 2+eps) = Gamma(-eps) Gamma(1+eps)^2 / Gamma(2+2eps),
  // so c_{-1} = -1 and c_0 = 2 - EulerGamma
  auto amp4 = assemble_amplitude_expansion(g, Rat(2), 1, cfg);
  CHECK(amp4.series.min_degree() == -1);
  CHECK(amp4.series.value(-1) == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(amp4.series.value(0) ==
        doctest::Approx(2.0 - 0.577215664901532861).epsilon(1e-8));
}

TEST_CASE("series degrees never undershoot -n") {
  for (const Rat& d_half : {Rat(3, 2), Rat(2)}) {
    auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-8;
    auto amp = assemble_amplitude_expansion(g, d_half, 1, cfg);
    CHECK(amp.series.min_degree() >= -g.edge_count());
  }
}
