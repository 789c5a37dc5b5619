#include <benchmark/benchmark.h>

#include "feyntope/amplitude.hpp"

using namespace feyntope;

namespace {

Graph double_bubble() {
  // two one-loop bubbles sharing a vertex: 4 edges, 2 loops
  Graph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"e1", 0, 1, Rat(1)},
             {"e2", 0, 1, Rat(1)},
             {"e3", 1, 2, Rat(1)},
             {"e4", 1, 2, Rat(1)}};
  g.momenta = std::vector<RatVec>{{Rat(1)}, {Rat(0)}, {Rat(-1)}};
  return g;
}

void bm_symanzik_triangle(benchmark::State& state) {
  auto g = make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(-2)});
  for (auto _ : state) {
    auto q = q_polynomial(g);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(bm_symanzik_triangle);

void bm_lattice_double_bubble(benchmark::State& state) {
  auto g = double_bubble();
  auto psi = first_symanzik(g);
  auto q = q_polynomial(g);
  for (auto _ : state) {
    auto a = reduce_lattice(build_point_set(psi, q), loop_number(g));
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(bm_lattice_double_bubble);

void bm_facets_combinatorial(benchmark::State& state) {
  auto g = double_bubble();
  for (auto _ : state) {
    auto f = facet_normals(g);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(bm_facets_combinatorial);

void bm_facets_hull(benchmark::State& state) {
  auto g = double_bubble();
  auto a = reduce_lattice(build_point_set(first_symanzik(g), q_polynomial(g)), loop_number(g));
  for (auto _ : state) {
    auto f = brute_force_facets(a);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(bm_facets_hull);

void bm_normalized_volume(benchmark::State& state) {
  auto g = double_bubble();
  auto a = reduce_lattice(build_point_set(first_symanzik(g), q_polynomial(g)), loop_number(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalized_volume(a));
  }
}
BENCHMARK(bm_normalized_volume);

void bm_reduction_bubble_d4(benchmark::State& state) {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto a = reduce_lattice(build_point_set(first_symanzik(g), q_polynomial(g)), 1);
  auto normals = facet_normals(g);
  AffineAlpha alpha{{Rat(2), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  for (auto _ : state) {
    auto red = reduce_to_interior(alpha, a, normals);
    benchmark::DoNotOptimize(red);
  }
}
BENCHMARK(bm_reduction_bubble_d4);

void bm_k_integral_bubble(benchmark::State& state) {
  auto g = make_bubble(Rat(1), Rat(1), {Rat(1)});
  auto psi = first_symanzik(g);
  auto q = q_polynomial(g);
  auto a = reduce_lattice(build_point_set(psi, q), 1);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  KEvaluator eval(a, kinematic_point_from(psi, q), facet_normals(g), cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.integral({Rat(3, 2), Rat(1), Rat(1)}));
  }
}
BENCHMARK(bm_k_integral_bubble);

void bm_gamma_series(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_ratio_series(Rat(2), Rat(1), 1, 2, 6));
  }
}
BENCHMARK(bm_gamma_series);

}  // namespace

BENCHMARK_MAIN();
