#include <doctest.h>

#include <random>

#include "feyntope/graph.hpp"
#include "oracle_helpers.hpp"

using namespace feyntope;

namespace {

EdgeSet mask(std::initializer_list<int> edges) {
  EdgeSet s = 0;
  for (int e : edges) s |= EdgeSet{1} << e;
  return s;
}

}  // namespace

TEST_CASE("validation accepts the minimal single-edge graph") {
  Graph g = make_single_edge(Rat(1), {Rat(1), Rat(0), Rat(0)});
  CHECK(g.edge_count() == 1);
  CHECK(g.momentum_dim() == 3);
  CHECK(loop_number(g) == 0);
}

TEST_CASE("momentum conservation is enforced") {
  Graph g;
  g.vertices = {"a", "b"};
  g.edges = {{"e1", 0, 1, Rat(1)}};
  g.momenta = std::vector<RatVec>{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}};
  CHECK_THROWS_AS(validate_graph(g), ValidationError);
}

TEST_CASE("disconnected graphs are rejected") {
  Graph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"e1", 0, 1, Rat(1)}};
  CHECK_THROWS_AS(validate_graph(g), ValidationError);
}

TEST_CASE("loop numbers") {
  CHECK(loop_number(make_single_edge(Rat(1), {Rat(1)})) == 0);
  CHECK(loop_number(make_bubble(Rat(1), Rat(1), {Rat(1)})) == 1);
  CHECK(loop_number(make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(-2)})) == 1);
}

TEST_CASE("spanning trees of the fixtures") {
  CHECK(spanning_trees(make_single_edge(Rat(1), {Rat(1)})) == std::vector<EdgeSet>{mask({0})});
  CHECK(spanning_trees(make_bubble(Rat(1), Rat(1), {Rat(1)})) ==
        std::vector<EdgeSet>{mask({0}), mask({1})});
  Graph tri = make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(1)});
  CHECK(spanning_trees(tri) ==
        std::vector<EdgeSet>{mask({0, 1}), mask({0, 2}), mask({1, 2})});
  // tadpole: the empty set is the only spanning tree
  CHECK(spanning_trees(make_tadpole(Rat(1))) == std::vector<EdgeSet>{0});
}

TEST_CASE("spanning tree counts match the matrix-tree determinant") {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 40) {
    int vcount = 2 + static_cast<int>(rng() % 4);
    int ecount = 1 + static_cast<int>(rng() % 8);
    Graph g;
    for (int v = 0; v < vcount; ++v) g.vertices.push_back("v" + std::to_string(v));
    for (int e = 0; e < ecount; ++e) {
      int a = static_cast<int>(rng() % vcount), b = static_cast<int>(rng() % vcount);
      g.edges.push_back({"e" + std::to_string(e), a, b, Rat(1)});
    }
    if (!is_connected(g)) continue;
    ++checked;
    CHECK(Int(spanning_trees(g).size()) == testing::matrix_tree_count(g));
  }
}

TEST_CASE("cuts of the fixtures carry their bipartitions") {
  auto single = cuts(make_single_edge(Rat(1), {Rat(1)}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].edges == mask({0}));
  CHECK(single[0].side == std::vector<int>{1});

  auto bubble = cuts(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  REQUIRE(bubble.size() == 1);
  CHECK(bubble[0].edges == mask({0, 1}));

  auto tri = cuts(make_triangle({Rat(1), Rat(1), Rat(1)}, {Rat(1)}, {Rat(1)}));
  REQUIRE(tri.size() == 3);
  std::vector<EdgeSet> cut_sets;
  for (const auto& c : tri) cut_sets.push_back(c.edges);
  std::sort(cut_sets.begin(), cut_sets.end());
  CHECK(cut_sets == std::vector<EdgeSet>{mask({0, 1}), mask({0, 2}), mask({1, 2})});
}

TEST_CASE("tadpole has no cuts") { CHECK(cuts(make_tadpole(Rat(1))).empty()); }

TEST_CASE("two-connected subgraphs") {
  auto single = two_connected_subgraphs(make_single_edge(Rat(1), {Rat(1)}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].edges == mask({0}));
  CHECK(single[0].loops == 0);
  CHECK_FALSE(single[0].self_loop);

  auto bubble = two_connected_subgraphs(make_bubble(Rat(1), Rat(1), {Rat(1)}));
  REQUIRE(bubble.size() == 3);
  CHECK(bubble[0].edges == mask({0}));
  CHECK(bubble[1].edges == mask({1}));
  CHECK(bubble[2].edges == mask({0, 1}));
  CHECK(bubble[2].loops == 1);

  auto tad = two_connected_subgraphs(make_tadpole(Rat(1)));
  REQUIRE(tad.size() == 1);
  CHECK(tad[0].self_loop);
  CHECK(tad[0].loops == 1);

  // a path is not 2-connected, its single edges are
  Graph path;
  path.vertices = {"a", "b", "c"};
  path.edges = {{"e1", 0, 1, Rat(1)}, {"e2", 1, 2, Rat(1)}};
  auto subs = two_connected_subgraphs(path);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].edge_count == 1);
  CHECK(subs[1].edge_count == 1);
}

TEST_CASE("enumeration cap is enforced") {
  Graph g;
  g.vertices = {"a", "b"};
  for (int e = 0; e < 17; ++e) g.edges.push_back({"e" + std::to_string(e), 0, 1, Rat(1)});
  CHECK_THROWS_AS(spanning_trees(g), ValidationError);
}
