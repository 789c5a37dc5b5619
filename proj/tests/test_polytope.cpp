#include <doctest.h>

#include <random>
#include <set>

#include "feyntope/polytope.hpp"
#include "feyntope/symanzik.hpp"
#include "oracle_helpers.hpp"

using namespace feyntope;

namespace {

LatticeSet reduced_lattice(const Graph& g) {
  return reduce_lattice(build_point_set(first_symanzik(g), q_polynomial(g)), loop_number(g));
}

std::set<IVec> normal_set(const std::vector<FacetNormal>& v) {
  std::set<IVec> out;
  for (const auto& f : v) out.insert(f.w);
  return out;
}

Graph with_zero_momenta(Graph g) {
  g.momenta = std::vector<RatVec>(g.vertex_count(), RatVec{Rat(0)});
  return g;
}

}  // namespace

TEST_CASE("facet normals of the single edge") {
  auto g = make_single_edge(Rat(1), {Rat(1)});
  CHECK(normal_set(facet_normals(g)) == std::set<IVec>{{0, 1}, {1, -1}});
  CHECK(normal_set(brute_force_facets(reduced_lattice(g))) == std::set<IVec>{{0, 1}, {1, -1}});
}

TEST_CASE("facet normals of the bubble") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  std::set<IVec> expect{{0, 1, 0}, {0, 0, 1}, {-1, 1, 1}, {2, -1, -1}};
  CHECK(normal_set(facet_normals(g)) == expect);
  CHECK(normal_set(brute_force_facets(reduced_lattice(g))) == expect);
}

TEST_CASE("tadpole carries the self-loop wall x_e >= 1") {
  Graph g = make_tadpole(Rat(1));
  g.momenta = std::vector<RatVec>{{Rat(0)}};
  auto normals = facet_normals(g);
  CHECK(normal_set(normals) == std::set<IVec>{{-1, 1}, {2, -1}});
  bool covered = false;
  for (const auto& f : normals)
    if (f.source == FacetNormal::Source::self_loop && f.w == IVec{-1, 1}) covered = true;
  CHECK(covered);
  CHECK(normal_set(brute_force_facets(reduced_lattice(g))) == normal_set(normals));
}

TEST_CASE("combinatorial facet description equals the hull on all graphs up to 4 edges") {
  for (int v = 1; v <= 4; ++v) {
    for (int e = std::max(1, v - 1); e <= 4; ++e) {
      for (const auto& g : testing::connected_multigraphs(v, e)) {
        auto a = reduced_lattice(g);
        CHECK(normal_set(facet_normals(g)) == normal_set(brute_force_facets(a)));
      }
    }
  }
}

TEST_CASE("combinatorial facet description holds on the complete graph K4 (6 edges, 3 loops)") {
  Graph g;
  g.vertices = {"a", "b", "c", "d"};
  int eid = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      g.edges.push_back({"e" + std::to_string(eid++), i, j, Rat(1)});
  g.momenta = std::vector<RatVec>(4, RatVec{Rat(0)});
  auto a = reduced_lattice(g);
  CHECK(a.generates_lattice);
  CHECK(normal_set(facet_normals(g)) == normal_set(brute_force_facets(a)));
}

TEST_CASE("inward pairing is nonnegative on every point") {
  for (const Graph& g :
       {make_bubble(Rat(1), Rat(1), {Rat(1)}),
        make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(-2)})}) {
    auto a = reduced_lattice(g);
    for (const auto& f : facet_normals(g))
      for (const auto& p : a.points) CHECK(dot(f.w, p) >= 0);
  }
}

TEST_CASE("points on a subgraph facet factor through the quotient graph") {
  auto g = with_zero_momenta(make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(-2)}));
  auto a = reduced_lattice(g);
  const int ell = loop_number(g);
  for (const auto& sub : two_connected_subgraphs(g)) {
    if (sub.self_loop || sub.edges == (EdgeSet{1} << g.edge_count()) - 1) continue;
    IVec w(g.edge_count() + 1, 0);
    w[0] = -sub.loops;
    for (int i : edge_list(sub.edges)) w[i + 1] = 1;

    Graph quot = testing::contract_subgraph(g, sub.edges);
    auto qpsi = first_symanzik(quot);
    auto qq = q_polynomial(quot);
    // subgraph as a standalone graph for its spanning-tree complements
    Graph sg;
    {
      std::vector<int> vmap(g.vertex_count(), -1);
      for (int i : edge_list(sub.edges)) {
        for (int vtx : {g.edges[i].source, g.edges[i].target})
          if (vmap[vtx] == -1) {
            vmap[vtx] = sg.vertex_count();
            sg.vertices.push_back("s" + std::to_string(vtx));
          }
        sg.edges.push_back({g.edges[i].id, vmap[g.edges[i].source], vmap[g.edges[i].target], Rat(1)});
      }
    }
    auto sub_psi = first_symanzik(sg);

    for (const auto& p : a.points) {
      if (dot(w, p) != 0) continue;
      // split the exponent vector into the gamma part and the rest
      ExpVec gamma_part, rest;
      int gi = 0;
      std::int64_t gamma_sum = 0, total = 0;
      for (int i = 0; i < g.edge_count(); ++i) {
        total += p[i + 1];
        if (sub.edges & (EdgeSet{1} << i)) {
          gamma_part.push_back(static_cast<int>(p[i + 1]));
          gamma_sum += p[i + 1];
          ++gi;
        } else {
          rest.push_back(static_cast<int>(p[i + 1]));
        }
      }
      CHECK(gamma_sum == sub.loops);
      CHECK(sub_psi.terms.count(gamma_part) == 1);
      if (total == ell) {
        CHECK(qpsi.terms.count(rest) == 1);
      } else {
        CHECK(qq.terms.count(rest) == 1);
      }
    }
  }
}

TEST_CASE("cone position of the bubble at D = 3, 4, 5") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto normals = facet_normals(g);
  CHECK(cone_position({Rat(3, 2), Rat(1), Rat(1)}, normals).kind ==
        ConePosition::Kind::interior);
  auto boundary = cone_position({Rat(2), Rat(1), Rat(1)}, normals);
  CHECK(boundary.kind == ConePosition::Kind::boundary);
  REQUIRE(boundary.witnesses.size() == 1);
  CHECK(boundary.witnesses[0].first.w == IVec{-1, 1, 1});
  auto outside = cone_position({Rat(5, 2), Rat(1), Rat(1)}, normals);
  CHECK(outside.kind == ConePosition::Kind::exterior);
  REQUIRE(outside.witnesses.size() == 1);
  CHECK(outside.witnesses[0].second == Rat(-1, 2));
}

TEST_CASE("semi non-resonance of the bubble") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto a = reduced_lattice(g);
  auto normals = facet_normals(g);

  auto ok = semi_nonresonant(amplitude_beta(Rat(3, 2), 2), normals, a);
  CHECK(ok.semi_nonresonant);

  auto bad = semi_nonresonant(amplitude_beta(Rat(2), 2), normals, a);
  CHECK_FALSE(bad.semi_nonresonant);
  REQUIRE(bad.witness_normal.has_value());
  CHECK(bad.witness_normal->w == IVec{-1, 1, 1});
  CHECK(bad.witness_sigma_pairing == 0);

  // minus an interior point: all pairings negative, trivially fine
  auto easy = semi_nonresonant(RatVec{Rat(-2), Rat(-5, 4), Rat(-5, 4)}, normals, a);
  CHECK(easy.semi_nonresonant);
}

TEST_CASE("convergence classification of the bubble") {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto c3 = amplitude_pole_report(g, Rat(3, 2));
  CHECK(c3.converges);
  CHECK(c3.overall_check == Rat(1));
  CHECK(c3.pole_witnesses.empty());

  auto c4 = amplitude_pole_report(g, Rat(2));
  CHECK_FALSE(c4.converges);
  REQUIRE(c4.pole_witnesses.size() == 1);
  CHECK(c4.pole_witnesses[0].value == 0);
  CHECK(c4.pole_witnesses[0].loops == 1);
  CHECK(c4.pole_witnesses[0].edge_count == 2);
}

TEST_CASE("any self-loop is reported divergent") {
  auto g = make_tadpole(Rat(1));
  for (const Rat& d_half : {Rat(1, 2), Rat(3, 4), Rat(1), Rat(2)}) {
    auto rep = amplitude_pole_report(g, d_half);
    CHECK_FALSE(rep.converges);
    CHECK(rep.self_loop_divergent);
  }
}

TEST_CASE("Mayer-Vietoris submodularity of subgraph loop counts") {
  std::mt19937 rng(23);
  for (const auto& g : {make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(-2)}),
                        make_bubble(Rat(1), Rat(1), {Rat(1)})}) {
    const EdgeSet full = (EdgeSet{1} << g.edge_count()) - 1;
    for (int trial = 0; trial < 50; ++trial) {
      EdgeSet s1 = static_cast<EdgeSet>(rng()) & full;
      EdgeSet s2 = static_cast<EdgeSet>(rng()) & full;
      CHECK(subgraph_loop_number(g, s1) + subgraph_loop_number(g, s2) <=
            subgraph_loop_number(g, s1 & s2) + subgraph_loop_number(g, s1 | s2));
    }
  }
}
