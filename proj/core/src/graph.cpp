#include "feyntope/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "feyntope/errors.hpp"

namespace feyntope {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false if already joined (i.e. the edge closes a cycle)
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool Graph::has_self_loop() const {
  for (const auto& e : edges)
    if (e.source == e.target) return true;
  return false;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  UnionFind uf(n);
  int comps = n;
  for (const auto& e : g.edges)
    if (uf.join(e.source, e.target)) --comps;
  return comps == 1;
}

void validate_graph(const Graph& g) {
  if (g.vertices.empty()) throw ValidationError("graph has no vertices");
  for (const auto& e : g.edges) {
    if (e.source < 0 || e.source >= g.vertex_count() || e.target < 0 ||
        e.target >= g.vertex_count())
      throw ValidationError("edge '" + e.id + "' references a missing vertex");
    if (e.mass2 < 0) throw ValidationError("edge '" + e.id + "' has negative mass2");
  }
  {
    std::vector<std::string> ids;
    for (const auto& e : g.edges) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw ValidationError("duplicate edge id");
  }
  if (!is_connected(g)) throw ValidationError("graph is not connected");
  if (g.momenta) {
    const auto& mom = *g.momenta;
    if (static_cast<int>(mom.size()) != g.vertex_count())
      throw ValidationError("momenta must cover every vertex");
    const std::size_t dim = mom.empty() ? 0 : mom[0].size();
    if (dim == 0) throw ValidationError("momentum vectors must be nonempty");
    RatVec sum(dim, 0);
    for (const auto& p : mom) {
      if (p.size() != dim)
        throw ValidationError("momentum vectors must share one dimension");
      for (std::size_t i = 0; i < dim; ++i) sum[i] += p[i];
    }
    for (const auto& s : sum)
      if (s != 0) throw ValidationError("momentum conservation violated");
  }
}

int loop_number(const Graph& g) {
  if (!is_connected(g)) throw ValidationError("loop_number requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

std::vector<int> edge_list(EdgeSet s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (s & (EdgeSet{1} << i)) out.push_back(i);
  return out;
}

static void check_cap(const Graph& g) {
  if (g.edge_count() > kEnumerationCap)
    throw ValidationError("edge count exceeds the enumeration cap of " +
                          std::to_string(kEnumerationCap));
}

std::vector<EdgeSet> spanning_trees(const Graph& g) {
  check_cap(g);
  const int m = g.edge_count();
  const int need = g.vertex_count() - 1;
  std::vector<EdgeSet> out;
  for (EdgeSet s = 0; s < (EdgeSet{1} << m); ++s) {
    if (std::popcount(s) != need) continue;
    UnionFind uf(g.vertex_count());
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(s & (EdgeSet{1} << i))) continue;
      acyclic = uf.join(g.edges[i].source, g.edges[i].target);
    }
    if (acyclic) out.push_back(s);  // |V|-1 acyclic edges on |V| vertices span
  }
  return out;
}

std::vector<Cut> cuts(const Graph& g) {
  check_cap(g);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<Cut> out;
  // Bipartitions (A, B), vertex 0 kept on side B so each split appears once.
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    const std::uint32_t side_a = mask << 1;

    EdgeSet crossing = 0;
    int in_a = std::popcount(side_a), in_b = n - in_a;
    int edges_a = 0, edges_b = 0;
    UnionFind ufa(n), ufb(n);
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      const bool sa = side_a & (1u << g.edges[i].source);
      const bool ta = side_a & (1u << g.edges[i].target);
      if (sa != ta) {
        crossing |= EdgeSet{1} << i;
      } else if (sa) {
        ++edges_a;
        acyclic = ufa.join(g.edges[i].source, g.edges[i].target);
      } else {
        ++edges_b;
        acyclic = ufb.join(g.edges[i].source, g.edges[i].target);
      }
    }
    // both sides must induce trees (connected and acyclic)
    if (!acyclic || edges_a != in_a - 1 || edges_b != in_b - 1) continue;
    Cut c;
    c.edges = crossing;
    for (int v = 0; v < n; ++v)
      if (side_a & (1u << v)) c.side.push_back(v);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Cut& x, const Cut& y) { return x.edges < y.edges || (x.edges == y.edges && x.side < y.side); });
  return out;
}

int subgraph_loop_number(const Graph& g, EdgeSet s) {
  std::vector<int> verts;
  int m = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(s & (EdgeSet{1} << i))) continue;
    ++m;
    verts.push_back(g.edges[i].source);
    verts.push_back(g.edges[i].target);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  UnionFind uf(g.vertex_count());
  int comps = static_cast<int>(verts.size());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(s & (EdgeSet{1} << i))) continue;
    if (g.edges[i].source != g.edges[i].target &&
        uf.join(g.edges[i].source, g.edges[i].target))
      --comps;
  }
  return m - static_cast<int>(verts.size()) + comps;
}

namespace {

// Vertex 2-connectivity of the subgraph induced by edge set s (no
// self-loops in s).  Connected, and still connected after deleting any
// one vertex together with its edges.
bool is_two_connected(const Graph& g, EdgeSet s) {
  std::vector<int> verts;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(s & (EdgeSet{1} << i))) continue;
    verts.push_back(g.edges[i].source);
    verts.push_back(g.edges[i].target);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) return false;

  auto connected_avoiding = [&](int removed) {
    std::vector<int> keep;
    for (int v : verts)
      if (v != removed) keep.push_back(v);
    if (keep.size() <= 1) return true;
    UnionFind uf(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
      if (!(s & (EdgeSet{1} << i))) continue;
      const auto& e = g.edges[i];
      if (e.source == removed || e.target == removed) continue;
      uf.join(e.source, e.target);
    }
    const int root = uf.find(keep[0]);
    for (int v : keep)
      if (uf.find(v) != root) return false;
    return true;
  };

  if (!connected_avoiding(-1)) return false;
  for (int v : verts)
    if (!connected_avoiding(v)) return false;
  return true;
}

}  // namespace

std::vector<TwoConnectedSubgraph> two_connected_subgraphs(const Graph& g) {
  check_cap(g);
  const int m = g.edge_count();
  EdgeSet self_loops = 0;
  for (int i = 0; i < m; ++i)
    if (g.edges[i].source == g.edges[i].target) self_loops |= EdgeSet{1} << i;

  std::vector<TwoConnectedSubgraph> out;
  for (EdgeSet s = 1; s < (EdgeSet{1} << m); ++s) {
    if (s & self_loops) continue;
    if (!is_two_connected(g, s)) continue;
    TwoConnectedSubgraph sub;
    sub.edges = s;
    sub.edge_count = std::popcount(s);
    sub.loops = subgraph_loop_number(g, s);
    out.push_back(sub);
  }
  for (int i = 0; i < m; ++i) {
    if (!(self_loops & (EdgeSet{1} << i))) continue;
    TwoConnectedSubgraph sub;
    sub.edges = EdgeSet{1} << i;
    sub.edge_count = 1;
    sub.loops = 1;
    sub.self_loop = true;
    out.push_back(sub);
  }
  std::sort(out.begin(), out.end(), [](const TwoConnectedSubgraph& a, const TwoConnectedSubgraph& b) {
    return std::pair(a.edge_count, a.edges) < std::pair(b.edge_count, b.edges);
  });
  return out;
}

Graph make_single_edge(const Rat& mass2, const RatVec& p) {
  Graph g;
  g.vertices = {"v1", "v2"};
  g.edges = {{"e1", 0, 1, mass2}};
  RatVec minus;
  for (const auto& x : p) minus.push_back(-x);
  g.momenta = std::vector<RatVec>{p, minus};
  validate_graph(g);
  return g;
}

Graph make_bubble(const Rat& m1sq, const Rat& m2sq, const RatVec& p) {
  Graph g;
  g.vertices = {"v1", "v2"};
  g.edges = {{"e1", 0, 1, m1sq}, {"e2", 0, 1, m2sq}};
  RatVec minus;
  for (const auto& x : p) minus.push_back(-x);
  g.momenta = std::vector<RatVec>{p, minus};
  validate_graph(g);
  return g;
}

Graph make_triangle(const std::vector<Rat>& mass2, const RatVec& p1, const RatVec& p2) {
  Graph g;
  g.vertices = {"v1", "v2", "v3"};
  g.edges = {{"e1", 0, 1, mass2.at(0)}, {"e2", 1, 2, mass2.at(1)}, {"e3", 2, 0, mass2.at(2)}};
  RatVec p3;
  for (std::size_t i = 0; i < p1.size(); ++i) p3.push_back(-p1[i] - p2[i]);
  g.momenta = std::vector<RatVec>{p1, p2, p3};
  validate_graph(g);
  return g;
}

Graph make_tadpole(const Rat& mass2) {
  Graph g;
  g.vertices = {"v1"};
  g.edges = {{"e1", 0, 0, mass2}};
  validate_graph(g);
  return g;
}

}  // namespace feyntope
