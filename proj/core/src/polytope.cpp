#include "feyntope/polytope.hpp"

#include <algorithm>

#include "feyntope/errors.hpp"
#include "feyntope/geometry.hpp"

namespace feyntope {

std::vector<FacetNormal> facet_normals(const Graph& g) {
  const int n = g.edge_count();
  const int ell = loop_number(g);
  std::vector<FacetNormal> out;
  for (const auto& sub : two_connected_subgraphs(g)) {
    FacetNormal f;
    f.w.assign(n + 1, 0);
    f.w[0] = -sub.loops;
    for (int i : edge_list(sub.edges)) f.w[i + 1] = 1;
    f.source = sub.self_loop ? FacetNormal::Source::self_loop : FacetNormal::Source::subgraph;
    f.edge_indices = edge_list(sub.edges);
    out.push_back(std::move(f));
  }
  FacetNormal upper;
  upper.w.assign(n + 1, -1);
  upper.w[0] = ell + 1;
  upper.source = FacetNormal::Source::upper;
  out.push_back(std::move(upper));
  std::sort(out.begin(), out.end(),
            [](const FacetNormal& a, const FacetNormal& b) { return a.w < b.w; });
  return out;
}

std::vector<FacetNormal> brute_force_facets(const LatticeSet& a) {
  std::vector<FacetNormal> out;
  for (auto& w : dual_cone_rays(a.points)) {
    FacetNormal f;
    f.w = std::move(w);
    f.source = FacetNormal::Source::hull;
    out.push_back(std::move(f));
  }
  return out;
}

ConePosition cone_position(const RatVec& alpha, const std::vector<FacetNormal>& normals) {
  ConePosition pos;
  bool any_zero = false, any_neg = false;
  for (const auto& f : normals) {
    Rat v = dot(f.w, alpha);
    if (v < 0) {
      any_neg = true;
      pos.witnesses.emplace_back(f, v);
    } else if (v == 0) {
      any_zero = true;
      pos.witnesses.emplace_back(f, v);
    }
  }
  pos.kind = any_neg   ? ConePosition::Kind::exterior
             : any_zero ? ConePosition::Kind::boundary
                        : ConePosition::Kind::interior;
  return pos;
}

namespace {

// Membership of target in the numerical semigroup generated by gens
// (nonnegative integers, zeros allowed).  Plain reachability DP; targets
// here are tiny, bounded by pairings of beta with facet normals.
bool semigroup_member(const std::vector<Int>& gens, const Int& target) {
  if (target == 0) return true;
  if (target < 0) return false;
  constexpr std::int64_t kDpCap = 1 << 22;
  if (target > kDpCap) throw Error("semigroup membership target exceeds DP cap");
  const auto t = target.convert_to<std::int64_t>();
  std::vector<bool> reach(static_cast<std::size_t>(t) + 1, false);
  reach[0] = true;
  for (const auto& gbig : gens) {
    if (gbig <= 0) continue;
    const auto g = gbig.convert_to<std::int64_t>();
    for (std::int64_t v = g; v <= t; ++v)
      if (reach[v - g]) reach[v] = true;
  }
  return reach[static_cast<std::size_t>(t)];
}

}  // namespace

SemiNonResonance semi_nonresonant(const RatVec& beta, const std::vector<FacetNormal>& normals,
                                  const LatticeSet& a) {
  SemiNonResonance res;
  for (const auto& f : normals) {
    // <w, -beta + sigma> = 0 for sigma in Sigma  <=>  <w, beta> lies in the
    // numerical semigroup generated by the pairings <w, a>
    Rat target = dot(f.w, beta);
    if (boost::multiprecision::denominator(target) != 1) continue;
    Int t = boost::multiprecision::numerator(target);
    if (t < 0) continue;  // semigroup pairings are >= 0
    std::vector<Int> gens;
    for (const auto& p : a.points) gens.emplace_back(dot(f.w, p));
    if (semigroup_member(gens, t)) {
      res.semi_nonresonant = false;
      res.witness_normal = f;
      res.witness_sigma_pairing = t;
      return res;
    }
  }
  return res;
}

ConvergenceReport amplitude_pole_report(const Graph& g, const Rat& d_half) {
  const int n = g.edge_count();
  const int ell = loop_number(g);
  ConvergenceReport rep;
  rep.overall_check = d_half * (ell + 1) - n;

  RatVec alpha(n + 1, Rat(1));
  alpha[0] = d_half;

  bool all_strict = rep.overall_check > 0;
  if (rep.overall_check <= 0) {
    FacetNormal upper;
    upper.w.assign(n + 1, -1);
    upper.w[0] = ell + 1;
    upper.source = FacetNormal::Source::upper;
    rep.violations.emplace_back(upper, rep.overall_check);
  }

  for (const auto& sub : two_connected_subgraphs(g)) {
    FacetNormal f;
    f.w.assign(n + 1, 0);
    f.w[0] = -sub.loops;
    for (int i : edge_list(sub.edges)) f.w[i + 1] = 1;
    f.source = sub.self_loop ? FacetNormal::Source::self_loop : FacetNormal::Source::subgraph;
    f.edge_indices = edge_list(sub.edges);

    // convergence needs D/2 ell_gamma < |E(gamma)| strictly
    Rat pairing = Rat(sub.edge_count) - d_half * sub.loops;
    if (pairing <= 0) {
      all_strict = false;
      rep.violations.emplace_back(f, pairing);
    }
    // predicted pole: D/2 ell_gamma - |E(gamma)| in Z_{>=0}
    Rat pv = d_half * sub.loops - sub.edge_count;
    if (pv >= 0 && boost::multiprecision::denominator(pv) == 1) {
      PoleWitness w;
      for (int i : edge_list(sub.edges)) w.edges.push_back(g.edges[i].id);
      w.loops = sub.loops;
      w.edge_count = sub.edge_count;
      w.value = boost::multiprecision::numerator(pv);
      w.self_loop = sub.self_loop;
      rep.pole_witnesses.push_back(std::move(w));
    }
    if (sub.self_loop) rep.self_loop_divergent = true;
  }

  rep.converges = all_strict && !rep.self_loop_divergent;
  return rep;
}

}  // namespace feyntope
