#include <doctest.h>

#include "feyntope/amplitude.hpp"
#include "feyntope/continuation.hpp"
#include "feyntope/symanzik.hpp"

using namespace feyntope;

namespace {

struct Fixture {
  Graph g;
  GradedPolynomial psi, q;
  LatticeSet a;
  std::vector<FacetNormal> normals;
  KinematicPoint kin;
};

Fixture make_fixture(const Graph& g) {
  Fixture f;
  f.g = g;
  f.psi = first_symanzik(g);
  f.q = q_polynomial(g);
  f.a = reduce_lattice(build_point_set(f.psi, f.q), loop_number(g));
  f.normals = facet_normals(g);
  f.kin = kinematic_point_from(f.psi, f.q);
  return f;
}

const FacetNormal& normal_by_w(const std::vector<FacetNormal>& v, const IVec& w) {
  for (const auto& f : v)
    if (f.w == w) return f;
  REQUIRE(false);
  return v.front();
}

}  // namespace

TEST_CASE("contiguity step on the single edge") {
  // <w,alpha> K(alpha) = alpha0 sum <w,a> P_a K(alpha+a) at alpha=(2,1),
  // w=(0,1): only the point (1,1) contributes, coefficient 2
  auto f = make_fixture(make_single_edge(Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(2), Rat(1)}, {Rat(0), Rat(0)}};
  auto terms = contiguity_step(alpha, normal_by_w(f.normals, {0, 1}), f.a);
  REQUIRE(terms.size() == 1);
  CHECK(f.a.points[terms[0].point] == IVec{1, 1});
  CHECK(terms[0].coefficient.eval(Rat(0)) == Rat(2));
  CHECK(terms[0].alpha.base == RatVec{Rat(3), Rat(2)});
}

TEST_CASE("w = e0 reproduces the trivial identity") {
  // <e0, a> = 1 for every reduced point, so the right side runs over all
  // of A with coefficient alpha0 / alpha0 = 1 each
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  FacetNormal e0;
  e0.w = {1, 0, 0};
  AffineAlpha alpha{{Rat(3, 2), Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(0)}};
  auto terms = contiguity_step(alpha, e0, f.a);
  CHECK(terms.size() == static_cast<std::size_t>(f.a.size()));
  for (const auto& t : terms) CHECK(t.coefficient.eval(Rat(0)) == Rat(1));
}

TEST_CASE("alpha0 identically zero kills every coefficient") {
  auto f = make_fixture(make_single_edge(Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(0), Rat(-1)}, {Rat(0), Rat(0)}};
  auto terms = contiguity_step(alpha, normal_by_w(f.normals, {0, 1}), f.a);
  for (const auto& t : terms) CHECK(t.coefficient.is_zero());
}

TEST_CASE("identically vanishing pairing is a resonant error") {
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(2), Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(contiguity_step(alpha, normal_by_w(f.normals, {-1, 1, 1}), f.a),
                  ResonantError);
  CHECK_THROWS_AS(reduce_to_interior(alpha, f.a, f.normals), ResonantError);
}

TEST_CASE("interior input reduces to a single unit term") {
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(3, 2), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  auto red = reduce_to_interior(alpha, f.a, f.normals);
  CHECK(red.steps == 0);
  CHECK(red.pole_order_bound == 0);
  REQUIRE(red.terms.size() == 1);
  CHECK(red.terms[0].monomial.empty());
  CHECK(red.terms[0].coefficient.laurent(0, 0) == std::vector<Rat>{Rat(1)});
}

TEST_CASE("single edge on the upper wall reduces in one step") {
  auto f = make_fixture(make_single_edge(Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
  auto red = reduce_to_interior(alpha, f.a, f.normals);
  CHECK(red.steps == 1);
  CHECK(red.pole_order_bound == 1);
  REQUIRE(red.terms.size() == 1);
  // K((1+eps,1)) = (1+eps)/eps P_{(1,0)} K((2+eps,1))
  CHECK(red.terms[0].alpha.base == RatVec{Rat(2), Rat(1)});
  CHECK(red.terms[0].coefficient.eval(Rat(1)) == Rat(2));
  REQUIRE(red.terms[0].monomial.size() == 1);
}

TEST_CASE("bubble at D = 4: one step, three leaves, simple pole") {
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(2), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  auto red = reduce_to_interior(alpha, f.a, f.normals);
  CHECK(red.pole_order_bound == 1);
  REQUIRE(red.terms.size() == 3);
  for (const auto& t : red.terms) {
    // every leaf is strictly interior
    for (const auto& n : f.normals) CHECK(dot(n.w, t.alpha.base) > 0);
    // denominator carries exactly the eps factor
    CHECK(t.coefficient.pole_order() == 1);
    // coefficient is -(2+eps)/eps times the leaf's P-pairing weight
    auto c = t.coefficient.laurent(-1, -1);
    CHECK(c[0] < 0);
  }
}

TEST_CASE("one contiguity step holds numerically at eps = +-1/10") {
  // interior base: both sides of the identity are convergent integrals
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(3, 2), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  const auto& w = normal_by_w(f.normals, {-1, 1, 1});
  auto terms = contiguity_step(alpha, w, f.a);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  KEvaluator eval(f.a, f.kin, f.normals, cfg);
  for (const Rat& eps : {Rat(1, 10), Rat(-1, 10)}) {
    RatVec base = alpha.base;
    base[0] += eps;
    QuadResult lhs = eval.integral(base);
    double rhs = 0, rhs_err = 0;
    for (const auto& t : terms) {
      RatVec leaf = t.alpha.base;
      leaf[0] += eps;
      QuadResult kv = eval.integral(leaf);
      const double c = to_double(t.coefficient.eval(eps) * f.kin.at(f.a.labels[t.point]));
      rhs += c * kv.value;
      rhs_err += std::abs(c) * kv.abs_error;
    }
    CHECK(std::abs(lhs.value - rhs) <= 10 * (lhs.abs_error + rhs_err) + 1e-12);
  }
}

TEST_CASE("assembled reduction identity holds numerically on the convergent side") {
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(2), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  auto red = reduce_to_interior(alpha, f.a, f.normals);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  KEvaluator eval(f.a, f.kin, f.normals, cfg);
  // the base sits on a wall, so only eps < 0 keeps the left side interior
  for (const Rat& eps : {Rat(-1, 10), Rat(-1, 20)}) {
    RatVec shifted = alpha.base;
    shifted[0] += eps;
    QuadResult lhs = eval.integral(shifted);
    QuadResult rhs = evaluate_reduction_at(red, eval, f.kin, eps);
    CHECK(std::abs(lhs.value - rhs.value) <=
          10 * (lhs.abs_error + rhs.abs_error) + 1e-12 * std::abs(lhs.value));
  }
}

TEST_CASE("step budget is respected") {
  auto f = make_fixture(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  AffineAlpha alpha{{Rat(-10), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(reduce_to_interior(alpha, f.a, f.normals, 3), Error);
}
