#include "feyntope/geometry.hpp"

#include <algorithm>
#include <set>

#include "feyntope/errors.hpp"
#include "feyntope/intlin.hpp"

namespace feyntope {

namespace {

using BigVec = std::vector<Int>;

Int big_dot(const IVec& p, const BigVec& r) {
  Int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += Int(p[i]) * r[i];
  return s;
}

IVec to_ivec(const BigVec& v) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<std::int64_t>::max() ||
        v[i] < std::numeric_limits<std::int64_t>::min())
      throw Error("facet normal entry overflows int64");
    out[i] = v[i].convert_to<std::int64_t>();
  }
  return out;
}

// Greedy selection of d linearly independent rows.
std::vector<int> independent_subset(const std::vector<IVec>& pts, int d) {
  std::vector<int> chosen;
  RatMat acc;
  for (std::size_t i = 0; i < pts.size() && static_cast<int>(chosen.size()) < d; ++i) {
    RatMat trial = acc;
    trial.emplace_back(pts[i].begin(), pts[i].end());
    if (rank(trial) == static_cast<int>(trial.size())) {
      acc = std::move(trial);
      chosen.push_back(static_cast<int>(i));
    }
  }
  if (static_cast<int>(chosen.size()) < d)
    throw ValidationError("point set does not span the ambient space");
  return chosen;
}

// Inverse of a d x d rational matrix, columns returned as primitive
// integer vectors.
std::vector<BigVec> inverse_columns(const std::vector<IVec>& pts, const std::vector<int>& rows) {
  const int d = static_cast<int>(rows.size());
  RatMat a(d, RatVec(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a[i][j] = Rat(pts[rows[i]][j]);
    a[i][d + i] = 1;
  }
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = c; i < d; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    std::swap(a[c], a[piv]);
    Rat dval = a[c][c];
    for (int j = 0; j < 2 * d; ++j) a[c][j] /= dval;
    for (int i = 0; i < d; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 2 * d; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<BigVec> cols(d, BigVec(d));
  for (int j = 0; j < d; ++j) {
    Int lcm = 1;
    for (int i = 0; i < d; ++i)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(a[i][d + j]));
    for (int i = 0; i < d; ++i)
      cols[j][i] = boost::multiprecision::numerator(a[i][d + j] * Rat(lcm));
    make_primitive(cols[j]);
  }
  return cols;
}

}  // namespace

std::vector<IVec> dual_cone_rays(const std::vector<IVec>& points) {
  if (points.empty()) throw ValidationError("empty point set");
  const int d = static_cast<int>(points[0].size());

  const std::vector<int> init = independent_subset(points, d);
  std::vector<BigVec> rays = inverse_columns(points, init);

  std::vector<int> processed = init;  // constraint indices already enforced
  std::vector<bool> used(points.size(), false);
  for (int i : init) used[i] = true;

  auto adjacent = [&](const BigVec& r, const BigVec& s) {
    IntMat common;
    for (int i : processed) {
      if (big_dot(points[i], r) == 0 && big_dot(points[i], s) == 0)
        common.emplace_back(points[i].begin(), points[i].end());
    }
    return rank(common) == d - 2;
  };

  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    if (used[pi]) continue;
    used[pi] = true;
    const IVec& p = points[pi];
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = big_dot(p, rays[i]);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      processed.push_back(static_cast<int>(pi));
      continue;
    }
    std::vector<BigVec> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        if (d > 2 && !adjacent(rays[i], rays[j])) continue;
        BigVec combo(d);
        for (int k = 0; k < d; ++k)
          combo[k] = val[i] * rays[j][k] - val[j] * rays[i][k];
        make_primitive(combo);
        next.push_back(std::move(combo));
      }
    }
    processed.push_back(static_cast<int>(pi));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
  }

  std::vector<IVec> out;
  out.reserve(rays.size());
  for (const auto& r : rays) out.push_back(to_ivec(r));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Affine rank of a point set (dimension of the affine hull).
int affine_rank(const std::vector<IVec>& pts) {
  if (pts.size() <= 1) return 0;
  IntMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Int> row(pts[i].size());
    for (std::size_t j = 0; j < pts[i].size(); ++j) row[j] = Int(pts[i][j]) - Int(pts[0][j]);
    diffs.push_back(std::move(row));
  }
  return rank(diffs);
}

void triangulate_rec(const std::vector<IVec>& pts, const std::vector<int>& idx,
                     std::vector<std::vector<int>>& out) {
  const int d = static_cast<int>(pts[0].size());
  if (d == 0) {
    out.push_back({idx[0]});
    return;
  }
  if (d == 1) {
    int lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = static_cast<int>(i);
      if (pts[i][0] > pts[hi][0]) hi = static_cast<int>(i);
    }
    out.push_back({idx[lo], idx[hi]});
    return;
  }

  // homogenize and take the hull facets of the polytope
  std::vector<IVec> homog;
  homog.reserve(pts.size());
  for (const auto& p : pts) {
    IVec h(d + 1);
    h[0] = 1;
    for (int i = 0; i < d; ++i) h[i + 1] = p[i];
    homog.push_back(std::move(h));
  }
  const std::vector<IVec> facets = dual_cone_rays(homog);

  int v0 = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[v0]) v0 = static_cast<int>(i);

  for (const IVec& w : facets) {
    if (dot(w, homog[v0]) == 0) continue;  // apex lies on this facet
    std::vector<int> fidx_local;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(w, homog[i]) == 0) fidx_local.push_back(static_cast<int>(i));

    // project the facet along a coordinate where its normal is nonzero;
    // that map is injective on the facet hyperplane
    int drop = -1;
    for (int j = 1; j <= d; ++j)
      if (w[j] != 0) {
        drop = j - 1;
        break;
      }
    std::vector<IVec> fpts;
    std::vector<int> fidx_global;
    for (int li : fidx_local) {
      IVec q;
      for (int j = 0; j < d; ++j)
        if (j != drop) q.push_back(pts[li][j]);
      fpts.push_back(std::move(q));
      fidx_global.push_back(idx[li]);
    }
    std::vector<std::vector<int>> sub;
    triangulate_rec(fpts, fidx_global, sub);
    for (auto& s : sub) {
      s.push_back(idx[v0]);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<int>> pulling_triangulation(const std::vector<IVec>& points) {
  if (points.empty()) throw ValidationError("empty point set");
  std::vector<int> idx(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) idx[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  triangulate_rec(points, idx, out);
  return out;
}

Int lattice_normalized_volume(const std::vector<IVec>& points, bool* degenerate) {
  if (degenerate) *degenerate = false;
  if (points.empty()) throw ValidationError("empty point set");
  const int d = static_cast<int>(points[0].size());
  if (d == 0) return 1;
  if (affine_rank(points) < d) {
    if (degenerate) *degenerate = true;
    return 0;
  }
  Int total = 0;
  for (const auto& simplex : pulling_triangulation(points)) {
    IntMat m(d, std::vector<Int>(d));
    const IVec& base = points[simplex.back()];
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m[r][c] = Int(points[simplex[r]][c]) - Int(base[c]);
    Int v = determinant(std::move(m));
    total += v < 0 ? -v : v;
  }
  return total;
}

}  // namespace feyntope
