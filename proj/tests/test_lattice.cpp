#include <doctest.h>

#include "feyntope/lattice.hpp"
#include "feyntope/symanzik.hpp"
#include "oracle_helpers.hpp"

using namespace feyntope;

namespace {

LatticeSet reduced_lattice(const Graph& g) {
  auto psi = first_symanzik(g);
  auto q = q_polynomial(g);
  return reduce_lattice(build_point_set(psi, q), loop_number(g));
}

bool has_point(const LatticeSet& a, const IVec& p) { return a.index_of(p) >= 0; }

}  // namespace

TEST_CASE("point set of the single edge") {
  auto g = make_single_edge(Rat(1), {Rat(1)});
  auto raw = build_point_set(first_symanzik(g), q_polynomial(g));
  REQUIRE(raw.size() == 2);
  CHECK(has_point(raw, {1, 0}));
  CHECK(has_point(raw, {0, 1}));
  auto red = reduce_lattice(raw, 0);
  CHECK(has_point(red, {1, 0}));
  CHECK(has_point(red, {1, 1}));
  CHECK(red.generates_lattice);
}

TEST_CASE("point set of the massive bubble") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto raw = build_point_set(first_symanzik(g), q_polynomial(g));
  REQUIRE(raw.size() == 5);
  CHECK(has_point(raw, {1, 1, 0}));
  CHECK(has_point(raw, {1, 0, 1}));
  CHECK(has_point(raw, {0, 2, 0}));
  CHECK(has_point(raw, {0, 1, 1}));
  CHECK(has_point(raw, {0, 0, 2}));
  auto red = reduce_lattice(raw, 1);
  CHECK(has_point(red, {1, 2, 0}));
  CHECK(has_point(red, {1, 1, 1}));
  CHECK(has_point(red, {1, 0, 2}));
  CHECK(has_point(red, {1, 1, 0}));
  CHECK(has_point(red, {1, 0, 1}));
  CHECK(red.generates_lattice);
}

TEST_CASE("massless bubble point set") {
  auto g = make_bubble(Rat(0), Rat(0), {Rat(1)});
  auto raw = build_point_set(first_symanzik(g), q_polynomial(g));
  REQUIRE(raw.size() == 3);
  CHECK(has_point(raw, {1, 1, 0}));
  CHECK(has_point(raw, {1, 0, 1}));
  CHECK(has_point(raw, {0, 1, 1}));
}

TEST_CASE("reduction is invertible on the sublattice") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto raw = build_point_set(first_symanzik(g), q_polynomial(g));
  auto red = reduce_lattice(raw, 1);
  const int ell = 1;
  for (int i = 0; i < raw.size(); ++i) {
    // inverse of r: x0 = (ell+1) r0 - (r1 + ... + rn)
    const IVec& r = red.points[i];
    std::int64_t tail = 0;
    for (std::size_t j = 1; j < r.size(); ++j) tail += r[j];
    IVec back = r;
    back[0] = (ell + 1) * r[0] - tail;
    CHECK(back == raw.points[i]);
  }
}

TEST_CASE("reduction rejects an off-hyperplane point") {
  LatticeSet bad;
  bad.n = 1;
  bad.points = {{1, 0}, {0, 2}};
  bad.labels = {"a", "b"};
  CHECK_THROWS_AS(reduce_lattice(bad, 1), ValidationError);
}

TEST_CASE("relation basis of the fixtures") {
  auto single = reduced_lattice(make_single_edge(Rat(1), {Rat(1)}));
  CHECK(relation_basis(single).empty());

  auto bubble = reduced_lattice(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  auto rels = relation_basis(bubble);
  REQUIRE(rels.size() == 2);  // 5 points, rank 3
  for (const auto& r : rels) {
    // exactness: sum n_a * a = 0 and sum n_a = 0 (first coordinates 1)
    Int csum = 0;
    std::vector<Int> vec(bubble.n + 1, 0);
    for (int i = 0; i < bubble.size(); ++i) {
      csum += r.coeff[i];
      for (int j = 0; j <= bubble.n; ++j) vec[j] += r.coeff[i] * bubble.points[i][j];
    }
    CHECK(csum == 0);
    for (const auto& v : vec) CHECK(v == 0);
  }
  // the documented relation is in the lattice the basis spans:
  // (1,1,0) + (1,0,2) - (1,1,1) - (1,0,1) = 0
  std::vector<Int> doc(bubble.size(), 0);
  doc[bubble.index_of({1, 1, 0})] = 1;
  doc[bubble.index_of({1, 0, 2})] = 1;
  doc[bubble.index_of({1, 1, 1})] = -1;
  doc[bubble.index_of({1, 0, 1})] = -1;
  {
    std::vector<Int> check(bubble.n + 1, 0);
    for (int i = 0; i < bubble.size(); ++i)
      for (int j = 0; j <= bubble.n; ++j) check[j] += doc[i] * bubble.points[i][j];
    for (const auto& v : check) CHECK(v == 0);
  }
}

TEST_CASE("raw relations split over A_S and A_C") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto raw = build_point_set(first_symanzik(g), q_polynomial(g));
  for (const auto& r : relation_basis(raw)) {
    Int total = 0, first = 0;
    for (int i = 0; i < raw.size(); ++i) {
      total += r.coeff[i];
      first += r.coeff[i] * raw.points[i][0];
    }
    CHECK(total == 0);
    CHECK(first == 0);  // sum over A_S alone vanishes
  }
}

TEST_CASE("gkz system shapes") {
  auto bubble = reduced_lattice(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  auto sys = gkz_system(bubble, amplitude_beta(Rat(3, 2), bubble.n));
  CHECK(sys.box_operators.size() == 2);
  CHECK(sys.euler.size() == 3);
  CHECK(sys.euler[0].size() == 5);
  CHECK(sys.beta == RatVec{Rat(-3, 2), Rat(-1), Rat(-1)});

  auto single = reduced_lattice(make_single_edge(Rat(1), {Rat(1)}));
  auto sys1 = gkz_system(single, amplitude_beta(Rat(2), single.n));
  CHECK(sys1.box_operators.empty());
  CHECK(sys1.euler.size() == 2);

  CHECK_THROWS_AS(gkz_system(single, RatVec{Rat(1)}), ValidationError);
}

TEST_CASE("amplitude beta vectors") {
  CHECK(amplitude_beta(Rat(2), 2) == RatVec{Rat(-2), Rat(-1), Rat(-1)});
  CHECK(amplitude_beta(Rat(3, 2), 1) == RatVec{Rat(-3, 2), Rat(-1)});
  CHECK(amplitude_beta(Rat(0), 2) == RatVec{Rat(0), Rat(-1), Rat(-1)});
}

TEST_CASE("normalized volume of the fixtures") {
  bool degenerate = false;
  CHECK(normalized_volume(reduced_lattice(make_single_edge(Rat(1), {Rat(1)})), &degenerate) == 1);
  CHECK_FALSE(degenerate);
  CHECK(normalized_volume(reduced_lattice(make_bubble(Rat(1), Rat(1), {Rat(1)}))) == 3);
  auto tri = reduced_lattice(make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(-2)}));
  CHECK(normalized_volume(tri) == testing::oracle_normalized_volume(tri));
}

TEST_CASE("volume flags degenerate configurations") {
  LatticeSet a;
  a.n = 2;
  a.points = {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}};  // collinear
  a.labels = {"a", "b", "c"};
  bool degenerate = false;
  CHECK(normalized_volume(a, &degenerate) == 0);
  CHECK(degenerate);
}

TEST_CASE("volume agrees with the oracle on small random multigraphs") {
  int checked = 0;
  for (int v = 2; v <= 3; ++v) {
    for (int e = v - 1; e <= 4; ++e) {
      for (const auto& g : testing::connected_multigraphs(v, e)) {
        auto a = reduced_lattice(g);
        CHECK(normalized_volume(a) == testing::oracle_normalized_volume(a));
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}
