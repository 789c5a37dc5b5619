#include "feyntope/continuation.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "feyntope/errors.hpp"

namespace feyntope {

namespace {

std::string normal_string(const IVec& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ")";
  return out.str();
}

}  // namespace

std::vector<ContiguityTerm> contiguity_step(const AffineAlpha& alpha, const FacetNormal& w,
                                            const LatticeSet& a) {
  const EpsPoly pair = alpha.pairing(w.w);
  if (pair.is_zero())
    throw ResonantError("pairing with facet " + normal_string(w.w) +
                        " vanishes identically in eps");
  const EpsPoly alpha0 = alpha.alpha0();

  std::vector<ContiguityTerm> out;
  for (int i = 0; i < a.size(); ++i) {
    const std::int64_t wa = dot(w.w, a.points[i]);
    assert(wa >= 0 && "inward normal pairs nonnegatively with every point");
    if (wa == 0) continue;
    ContiguityTerm t;
    EpsPoly num = alpha0;
    num *= Rat(wa);
    t.coefficient = EpsRational(num);
    t.coefficient.div_factor(pair.coeff(0), pair.coeff(1));
    t.point = i;
    t.alpha.base = alpha.base;
    for (std::size_t k = 0; k < t.alpha.base.size(); ++k) t.alpha.base[k] += a.points[i][k];
    t.alpha.dir = alpha.dir;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

struct LeafKey {
  RatVec base;
  std::map<std::string, int> monomial;
  bool operator<(const LeafKey& o) const {
    RatVecLess less;
    if (less(base, o.base)) return true;
    if (less(o.base, base)) return false;
    return monomial < o.monomial;
  }
};

// The facet with the most negative base pairing among those whose affine
// pairing is not identically zero; ties fall to the smaller w.  Facets
// with base pairing 0 and direction pairing 0 are resonant and can only
// be fixed by steps through other facets, so they are skipped here; if
// only resonant facets are violated the recursion is stuck.
const FacetNormal* pick_normal(const AffineAlpha& alpha, const std::vector<FacetNormal>& normals) {
  const FacetNormal* best = nullptr;
  const FacetNormal* blocked = nullptr;
  Rat best_val = 0;
  for (const auto& f : normals) {
    Rat v = dot(f.w, alpha.base);
    if (v > 0) continue;
    if (v == 0 && dot(f.w, alpha.dir) == 0) {
      blocked = &f;
      continue;
    }
    if (!best || v < best_val || (v == best_val && f.w < best->w)) {
      best = &f;
      best_val = v;
    }
  }
  if (!best && blocked)
    throw ResonantError("no admissible facet: pairing with " + normal_string(blocked->w) +
                        " vanishes identically in eps");
  return best;
}

}  // namespace

ReductionResult reduce_to_interior(const AffineAlpha& alpha, const LatticeSet& a,
                                   const std::vector<FacetNormal>& normals, int max_steps) {
  ReductionResult result;

  std::map<LeafKey, EpsRational> active;
  std::map<LeafKey, EpsRational> done;
  active[LeafKey{alpha.base, {}}] = EpsRational::one();

  while (!active.empty()) {
    auto it = active.begin();
    LeafKey key = it->first;
    EpsRational coef = it->second;
    active.erase(it);
    if (coef.is_zero()) continue;

    AffineAlpha cur{key.base, alpha.dir};
    const FacetNormal* w = pick_normal(cur, normals);
    if (!w) {
      auto [dit, inserted] = done.emplace(std::move(key), coef);
      if (!inserted) dit->second = dit->second + coef;
      continue;
    }
    if (++result.steps > max_steps)
      throw Error("reduction exceeded max_steps = " + std::to_string(max_steps));

    for (auto& child : contiguity_step(cur, *w, a)) {
      // progress invariant: the chosen pairing rises by >= 1 and no other
      // inward pairing can fall
      assert(dot(w->w, a.points[child.point]) >= 1);
      LeafKey ck;
      ck.base = child.alpha.base;
      ck.monomial = key.monomial;
      ck.monomial[a.labels[child.point]] += 1;
      EpsRational contrib = coef * child.coefficient;
      if (contrib.is_zero()) continue;
      auto [cit, inserted] = active.emplace(std::move(ck), contrib);
      if (!inserted) cit->second = cit->second + contrib;
    }
  }

  for (auto& [key, coef] : done) {
    if (coef.is_zero()) continue;
    ReductionTerm t;
    t.coefficient = std::move(coef);
    t.monomial = key.monomial;
    t.alpha = AffineAlpha{key.base, alpha.dir};
    result.pole_order_bound = std::max(result.pole_order_bound, t.coefficient.pole_order());
    result.terms.push_back(std::move(t));
  }
  return result;
}

}  // namespace feyntope
