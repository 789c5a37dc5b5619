#include "feyntope/lattice.hpp"

#include <algorithm>
#include <set>

#include "feyntope/errors.hpp"
#include "feyntope/geometry.hpp"
#include "feyntope/intlin.hpp"

namespace feyntope {

int LatticeSet::index_of(const IVec& p) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == p) return i;
  return -1;
}

LatticeSet build_point_set(const GradedPolynomial& psi, const GradedPolynomial& q) {
  if (psi.variable_count() != q.variable_count())
    throw ValidationError("psi and q have different variable counts");
  if (q.degree != psi.degree + 1)
    throw ValidationError("degree mismatch: deg Q must be deg Psi + 1");
  LatticeSet a;
  a.n = q.variable_count();
  auto add = [&](int first, const ExpVec& e, const std::string& label) {
    IVec p(a.n + 1);
    p[0] = first;
    for (int i = 0; i < a.n; ++i) p[i + 1] = e[i];
    a.points.push_back(std::move(p));
    a.labels.push_back(label);
  };
  for (const auto& [e, c] : psi.terms) add(1, e, c.label);
  for (const auto& [e, c] : q.terms) add(0, e, c.label);
  return a;
}

LatticeSet reduce_lattice(const LatticeSet& raw, int ell) {
  LatticeSet out;
  out.n = raw.n;
  out.labels = raw.labels;
  out.reduced = true;
  for (const auto& p : raw.points) {
    std::int64_t sum = 0;
    for (auto x : p) sum += x;
    if (sum % (ell + 1) != 0)
      throw ValidationError("point coordinate sum not divisible by ell+1 (upstream bug)");
    IVec r = p;
    r[0] = sum / (ell + 1);
    if (r[0] != 1)
      throw ValidationError("reduced point has first coordinate != 1 (upstream bug)");
    out.points.push_back(std::move(r));
  }
  {
    auto sorted = out.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("duplicate lattice point after reduction");
  }
  // columns of the point matrix must generate Z^{n+1}; with dropped
  // massless monomials this can fail, which only disables rank claims
  IntMat m(out.n + 1, std::vector<Int>(out.size()));
  for (int j = 0; j < out.size(); ++j)
    for (int i = 0; i <= out.n; ++i) m[i][j] = out.points[j][i];
  out.generates_lattice = columns_generate_lattice(m);
  return out;
}

std::vector<IntegerRelation> relation_basis(const LatticeSet& a) {
  if (a.size() < 2) return {};
  IntMat m(a.n + 1, std::vector<Int>(a.size()));
  for (int j = 0; j < a.size(); ++j)
    for (int i = 0; i <= a.n; ++i) m[i][j] = a.points[j][i];
  std::vector<IntegerRelation> out;
  for (auto& v : integer_kernel_basis(m)) out.push_back(IntegerRelation{std::move(v)});
  return out;
}

GkzSystem gkz_system(const LatticeSet& a, const RatVec& beta) {
  if (static_cast<int>(beta.size()) != a.n + 1)
    throw ValidationError("beta must have length n+1");
  GkzSystem sys;
  sys.box_operators = relation_basis(a);
  sys.euler.assign(a.n + 1, std::vector<Int>(a.size()));
  for (int i = 0; i <= a.n; ++i)
    for (int j = 0; j < a.size(); ++j) sys.euler[i][j] = a.points[j][i];
  sys.beta = beta;
  return sys;
}

RatVec amplitude_beta(const Rat& d_half, int n) {
  RatVec beta(n + 1, Rat(-1));
  beta[0] = -d_half;
  return beta;
}

Int normalized_volume(const LatticeSet& a, bool* degenerate) {
  std::vector<IVec> proj;
  proj.reserve(a.points.size());
  for (const auto& p : a.points) proj.emplace_back(p.begin() + 1, p.end());
  return lattice_normalized_volume(proj, degenerate);
}

}  // namespace feyntope
