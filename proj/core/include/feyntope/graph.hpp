#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feyntope/rational.hpp"

namespace feyntope {

// Hard cap for exhaustive subset enumeration (spanning trees, cuts,
// 2-connected subgraphs).
inline constexpr int kEnumerationCap = 16;

struct Edge {
  std::string id;
  int source = 0;  // vertex indices
  int target = 0;
  Rat mass2;       // nonnegative
};

// Multigraph with per-edge squared masses and optional per-vertex external
// momenta (Euclidean, all vectors of one dimension, summing to zero).
struct Graph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::optional<std::vector<RatVec>> momenta;  // indexed by vertex

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int momentum_dim() const { return momenta ? static_cast<int>((*momenta)[0].size()) : 0; }
  bool has_self_loop() const;
};

// Validates invariants: endpoints exist, connectivity, momentum
// conservation and a shared momentum dimension.  Throws ValidationError.
void validate_graph(const Graph& g);

bool is_connected(const Graph& g);

// ell = |E| - |V| + 1 for a connected graph.
int loop_number(const Graph& g);

using EdgeSet = std::uint32_t;  // bitmask over edge indices, cap is 16

std::vector<int> edge_list(EdgeSet s);

// All spanning trees as edge bitmasks, ascending mask order.
std::vector<EdgeSet> spanning_trees(const Graph& g);

// A cut is the set of edges between a vertex bipartition whose two sides
// both induce trees.  Removing it leaves exactly those two trees, and
// adding back any of its edges reconnects the graph; this matches the
// minimality conditions defining cuts.
struct Cut {
  EdgeSet edges = 0;
  std::vector<int> side;  // vertex indices of V_C (side containing vertex 0 excluded)
};

std::vector<Cut> cuts(const Graph& g);

struct TwoConnectedSubgraph {
  EdgeSet edges = 0;
  int loops = 0;        // ell_gamma
  int edge_count = 0;   // |E(gamma)|
  bool self_loop = false;
};

// Complete list of 2-connected edge subgraphs without self-loops, plus one
// entry per self-loop edge.  Single edges are 2-connected and included.
std::vector<TwoConnectedSubgraph> two_connected_subgraphs(const Graph& g);

// Loop number of the subgraph induced by an edge subset (vertices are the
// endpoints that occur), summed over its connected components.
int subgraph_loop_number(const Graph& g, EdgeSet s);

// Test fixtures used all over: single edge, bubble, triangle, tadpole.
Graph make_single_edge(const Rat& mass2, const RatVec& p);
Graph make_bubble(const Rat& m1sq, const Rat& m2sq, const RatVec& p);
Graph make_triangle(const std::vector<Rat>& mass2, const RatVec& p1, const RatVec& p2);
Graph make_tadpole(const Rat& mass2);

}  // namespace feyntope
