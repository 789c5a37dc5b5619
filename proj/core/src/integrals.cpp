#include "feyntope/integrals.hpp"

#include <algorithm>
#include <cmath>

#include "feyntope/errors.hpp"

namespace feyntope {

namespace {

constexpr double kLogFloor = -700.0;  // exp underflows below this

double safe_exp(double x) { return x < kLogFloor ? 0.0 : std::exp(x); }

// The DE rules probe astronomically large nodes; past this range every
// integrand here is dead zero and naive arithmetic would produce inf*0.
constexpr double kCoordCap = 1e12;

bool out_of_range(const std::vector<double>& x) {
  for (double v : x)
    if (!(std::abs(v) <= kCoordCap)) return true;
  return false;
}

// log sum exp with softmax weights on demand
struct LogSum {
  double lse = 0;
  std::vector<double> w;  // softmax weights
};

LogSum log_sum_exp(const std::vector<std::vector<double>>& pts, const std::vector<double>& logc,
                   const std::vector<double>& x, bool want_weights) {
  const std::size_t m = pts.size();
  std::vector<double> e(m);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double v = logc[i];
    for (std::size_t j = 0; j < x.size(); ++j) v += pts[i][j] * x[j];
    e[i] = v;
    top = std::max(top, v);
  }
  LogSum out;
  double s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = std::exp(e[i] - top);
    s += e[i];
  }
  out.lse = top + std::log(s);
  if (want_weights) {
    out.w.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.w[i] = e[i] / s;
  }
  return out;
}

std::vector<double> lse_gradient(const std::vector<std::vector<double>>& pts,
                                 const std::vector<double>& w, int n) {
  std::vector<double> g(n, 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < n; ++j) g[j] += w[i] * pts[i][j];
  return g;
}

std::vector<std::vector<double>> lse_hessian(const std::vector<std::vector<double>>& pts,
                                             const std::vector<double>& w,
                                             const std::vector<double>& mean, int n) {
  std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) h[j][k] += w[i] * (pts[i][j] - mean[j]) * (pts[i][k] - mean[k]);
  return h;
}

}  // namespace

Rat KinematicPoint::at(const std::string& label) const {
  auto it = assignment.find(label);
  if (it == assignment.end()) throw ValidationError("no kinematic value for label '" + label + "'");
  return it->second;
}

void KinematicPoint::validate() const {
  for (const auto& [label, v] : assignment)
    if (v <= 0) throw ValidationError("kinematic value for '" + label + "' must be positive");
}

KinematicPoint kinematic_point_from(const GradedPolynomial& psi, const GradedPolynomial& q) {
  KinematicPoint p;
  for (const auto& [e, c] : psi.terms) p.assignment[c.label] = c.value;
  for (const auto& [e, c] : q.terms) p.assignment[c.label] = c.value;
  p.validate();
  return p;
}

KEvaluator::KEvaluator(const LatticeSet& a, const KinematicPoint& p,
                       std::vector<FacetNormal> normals, QuadratureConfig cfg)
    : a_(a), normals_(std::move(normals)), cfg_(cfg) {
  cfg_.validate();
  p.validate();
  for (int i = 0; i < a_.size(); ++i) {
    std::vector<double> t(a_.n);
    for (int j = 0; j < a_.n; ++j) t[j] = static_cast<double>(a_.points[i][j + 1]);
    pts_.push_back(std::move(t));
    logp_.push_back(std::log(to_double(p.at(a_.labels[i]))));
  }
}

QuadResult KEvaluator::integral(const RatVec& alpha) const {
  return weighted_integral(alpha, std::vector<double>(a_.n, 0.0), 0.0, 0);
}

QuadResult KEvaluator::taylor_coeff(const RatVec& base, const RatVec& dir, int k) const {
  if (k < 0) throw ValidationError("taylor order must be nonnegative");
  bool dir_zero = true;
  for (const auto& d : dir)
    if (d != 0) dir_zero = false;
  if (dir_zero && k > 0) return QuadResult{0.0, 0.0, true, 0};
  std::vector<double> ut(a_.n);
  for (int j = 0; j < a_.n; ++j) ut[j] = to_double(dir[j + 1]);
  return weighted_integral(base, ut, to_double(dir[0]), k);
}

QuadResult KEvaluator::weighted_integral(const RatVec& base, const std::vector<double>& ut,
                                         double u0, int k) const {
  auto pos = cone_position(base, normals_);
  if (pos.kind != ConePosition::Kind::interior)
    throw ValidationError("alpha is not strictly interior to the cone");

  const int n = a_.n;
  const double a0 = to_double(base[0]);
  std::vector<double> at(n);
  for (int j = 0; j < n; ++j) at[j] = to_double(base[j + 1]);

  // center the base integrand: minimize a0*lse(x) - <at, x>
  Smooth target;
  target.value = [&](const std::vector<double>& x) {
    double v = a0 * log_sum_exp(pts_, logp_, x, false).lse;
    for (int j = 0; j < n; ++j) v -= at[j] * x[j];
    return v;
  };
  target.gradient = [&](const std::vector<double>& x) {
    auto ls = log_sum_exp(pts_, logp_, x, true);
    auto g = lse_gradient(pts_, ls.w, n);
    for (int j = 0; j < n; ++j) g[j] = a0 * g[j] - at[j];
    return g;
  };
  target.hessian = [&](const std::vector<double>& x) {
    auto ls = log_sum_exp(pts_, logp_, x, true);
    auto mean = lse_gradient(pts_, ls.w, n);
    auto h = lse_hessian(pts_, ls.w, mean, n);
    for (auto& row : h)
      for (auto& v : row) v *= a0;
    return h;
  };
  CenterInfo center = find_center(target, n);
  const double gmin = target.value(center.x);
  double log_det_l = 0;
  for (int i = 0; i < n; ++i) log_det_l += std::log(center.chol[i][i]);

  double kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;

  auto integrand = [&](const std::vector<double>& y) {
    if (out_of_range(y)) return 0.0;
    // x = center + L^{-T} y
    std::vector<double> x = y;
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= center.chol[j][i] * x[j];
      x[i] /= center.chol[i][i];
    }
    for (int i = 0; i < n; ++i) x[i] += center.x[i];
    auto ls = log_sum_exp(pts_, logp_, x, false);
    double logv = -a0 * ls.lse + gmin;  // relative to the peak
    for (int j = 0; j < n; ++j) logv += at[j] * x[j];
    double v = safe_exp(logv);
    if (k > 0) {
      double lin = -u0 * ls.lse;
      for (int j = 0; j < n; ++j) lin += ut[j] * x[j];
      double p = 1;
      for (int i = 0; i < k; ++i) p *= lin;
      v *= p / kfact;
    }
    return v;
  };

  QuadResult res;
  if (cfg_.method == QuadratureConfig::Method::tensor && n <= 3) {
    res = integrate_rn(integrand, n, cfg_);
  } else {
    // the integrand is already centered and Hessian-normalized, so the
    // proposal is a standard t at the origin
    std::vector<std::vector<double>> id(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) id[i][i] = 1.0;
    res = integrate_mc(integrand, std::vector<double>(n, 0.0), id, 4.0, cfg_);
  }
  const double scale = safe_exp(-gmin - log_det_l);
  res.value *= scale;
  res.abs_error *= scale;
  return res;
}

QuadResult k_integral(const RatVec& alpha, const KinematicPoint& p, const LatticeSet& a,
                      const QuadratureConfig& cfg) {
  KEvaluator ev(a, p, brute_force_facets(a), cfg);
  return ev.integral(alpha);
}

QuadResult k_taylor_coeff(const RatVec& base, const RatVec& dir, const KinematicPoint& p,
                          const LatticeSet& a, int k, const QuadratureConfig& cfg) {
  KEvaluator ev(a, p, brute_force_facets(a), cfg);
  return ev.taylor_coeff(base, dir, k);
}

namespace {

struct NumericPoly {
  std::vector<std::vector<double>> expo;
  std::vector<double> logc;
};

NumericPoly numeric_poly(const GradedPolynomial& poly, const KinematicPoint& p) {
  NumericPoly out;
  for (const auto& [e, c] : poly.terms) {
    out.expo.emplace_back(e.begin(), e.end());
    auto it = p.assignment.find(c.label);
    const Rat v = it == p.assignment.end() ? c.value : it->second;
    if (v <= 0) throw ValidationError("polynomial coefficient must stay positive");
    out.logc.push_back(std::log(to_double(v)));
  }
  return out;
}

// log of a positive polynomial at t > 0 (componentwise), stable
double log_poly(const NumericPoly& p, const std::vector<double>& logt) {
  double top = -std::numeric_limits<double>::infinity();
  std::vector<double> e(p.expo.size());
  for (std::size_t i = 0; i < p.expo.size(); ++i) {
    double v = p.logc[i];
    for (std::size_t j = 0; j < logt.size(); ++j) v += p.expo[i][j] * logt[j];
    e[i] = v;
    top = std::max(top, v);
  }
  double s = 0;
  for (double v : e) s += std::exp(v - top);
  return top + std::log(s);
}

}  // namespace

QuadResult j_integral(double c, double d, const GradedPolynomial& psi,
                      const GradedPolynomial& q, const KinematicPoint& p,
                      const std::vector<double>& v, const QuadratureConfig& cfg) {
  const int n = psi.variable_count();
  if (static_cast<int>(v.size()) != n) throw ValidationError("v must have one entry per edge");
  for (double vi : v)
    if (vi <= -1) throw ValidationError("t^v must be integrable on the simplex: v > -1");
  NumericPoly np = numeric_poly(psi, p), nq = numeric_poly(q, p);

  if (n == 1) {
    // Delta_0 is the single point t = 1
    std::vector<double> logt{0.0};
    QuadResult r;
    r.value = safe_exp(c * log_poly(nq, logt) - d * log_poly(np, logt));
    r.evals = 1;
    return r;
  }

  auto integrand = [&](const std::vector<double>& xi) {
    // Duffy chart:  t_j = xi_j * (1 - t_1 - ... - t_{j-1}),  t_n = remainder
    std::vector<double> logt(n);
    double rem = 1.0, logrem = 0.0, logjac = 0.0;
    for (int j = 0; j < n - 1; ++j) {
      if (rem <= 0) return 0.0;
      logt[j] = std::log(xi[j]) + logrem;
      logjac += logrem;
      rem *= (1.0 - xi[j]);
      logrem += std::log1p(-xi[j]);
    }
    if (rem <= 0) return 0.0;
    logt[n - 1] = logrem;
    double logv = c * log_poly(nq, logt) - d * log_poly(np, logt) + logjac;
    for (int j = 0; j < n; ++j) logv += v[j] * logt[j];
    return safe_exp(logv);
  };
  return integrate_unit_cube(integrand, n - 1, cfg);
}

namespace {

QuadResult i_integral_impl(double c1, double c2, const NumericPoly& np, const NumericPoly& nq,
                           const std::vector<double>& v, int n, const QuadratureConfig& cfg,
                           const std::vector<double>* box_lo, const std::vector<double>* box_hi) {
  auto log_integrand = [&](const std::vector<double>& x) {
    const double lq = log_poly(nq, x);
    const double lp = log_poly(np, x);
    double lv = -safe_exp(lq - lp) + c1 * lq - c2 * lp;
    for (int j = 0; j < n; ++j) lv += (v[j] + 1.0) * x[j];
    return lv;
  };
  auto integrand = [&](const std::vector<double>& x) { return safe_exp(log_integrand(x)); };
  if (box_lo) return integrate_box(integrand, *box_lo, *box_hi, cfg);

  // center on the peak of the log integrand (negated, minimized via
  // finite-difference Newton: cheap at these dimensions)
  Smooth target;
  target.value = [&](const std::vector<double>& x) { return -log_integrand(x); };
  const double h = 1e-5;
  target.gradient = [&](const std::vector<double>& x) {
    std::vector<double> g(n);
    std::vector<double> y = x;
    for (int i = 0; i < n; ++i) {
      y[i] = x[i] + h;
      const double fp = -log_integrand(y);
      y[i] = x[i] - h;
      const double fm = -log_integrand(y);
      y[i] = x[i];
      g[i] = (fp - fm) / (2 * h);
    }
    return g;
  };
  target.hessian = [&](const std::vector<double>& x) {
    std::vector<std::vector<double>> hm(n, std::vector<double>(n, 0.0));
    const double f0 = -log_integrand(x);
    std::vector<double> y = x;
    for (int i = 0; i < n; ++i) {
      y[i] = x[i] + h;
      const double fp = -log_integrand(y);
      y[i] = x[i] - h;
      const double fm = -log_integrand(y);
      y[i] = x[i];
      hm[i][i] = (fp - 2 * f0 + fm) / (h * h);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<double> z = x;
        z[i] += h;
        z[j] += h;
        const double fpp = -log_integrand(z);
        z[j] -= 2 * h;
        const double fpm = -log_integrand(z);
        z[i] -= 2 * h;
        const double fmm = -log_integrand(z);
        z[j] += 2 * h;
        const double fmp = -log_integrand(z);
        hm[i][j] = hm[j][i] = (fpp - fpm - fmp + fmm) / (4 * h * h);
      }
    return hm;
  };
  CenterInfo center = find_center(target, n);
  const double peak = log_integrand(center.x);
  double log_det_l = 0;
  for (int i = 0; i < n; ++i) log_det_l += std::log(center.chol[i][i]);

  auto scaled = [&](const std::vector<double>& y) {
    if (out_of_range(y)) return 0.0;
    std::vector<double> x = y;
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= center.chol[j][i] * x[j];
      x[i] /= center.chol[i][i];
    }
    for (int i = 0; i < n; ++i) x[i] += center.x[i];
    return safe_exp(log_integrand(x) - peak);
  };
  QuadResult res;
  if (cfg.method == QuadratureConfig::Method::tensor && n <= 3) {
    res = integrate_rn(scaled, n, cfg);
  } else {
    std::vector<std::vector<double>> id(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) id[i][i] = 1.0;
    res = integrate_mc(scaled, std::vector<double>(n, 0.0), id, 4.0, cfg);
  }
  const double scale = safe_exp(peak - log_det_l);
  res.value *= scale;
  res.abs_error *= scale;
  return res;
}

}  // namespace

QuadResult i_integral(double c1, double c2, const GradedPolynomial& psi,
                      const GradedPolynomial& q, const KinematicPoint& p,
                      const std::vector<double>& v, const QuadratureConfig& cfg) {
  const int n = psi.variable_count();
  if (static_cast<int>(v.size()) != n) throw ValidationError("v must have one entry per edge");
  NumericPoly np = numeric_poly(psi, p), nq = numeric_poly(q, p);
  return i_integral_impl(c1, c2, np, nq, v, n, cfg, nullptr, nullptr);
}

QuadResult i_integral_box(double c1, double c2, const GradedPolynomial& psi,
                          const GradedPolynomial& q, const KinematicPoint& p, double k_decade,
                          const QuadratureConfig& cfg) {
  const int n = psi.variable_count();
  NumericPoly np = numeric_poly(psi, p), nq = numeric_poly(q, p);
  const double lim = k_decade * std::log(10.0);
  std::vector<double> lo(n, -lim), hi(n, lim);
  return i_integral_impl(c1, c2, np, nq, std::vector<double>(n, 0.0), n, cfg, &lo, &hi);
}

QuadResult momentum_space_amplitude(const Graph& g, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!g.momenta) throw ValidationError("momentum-space amplitude needs external momenta");
  const int d = g.momentum_dim();
  const int ell = loop_number(g);
  const int dims = d * ell;
  if (dims > 6) throw ValidationError("oracle scale cap: D * loops must be <= 6");
  {
    auto rep = amplitude_pole_report(g, Rat(d) / 2);
    if (!rep.converges)
      throw ValidationError("momentum-space oracle requires a convergent amplitude");
  }

  const int m = g.edge_count();
  // spanning tree for the momentum lift and for fundamental cycles
  EdgeSet tree = spanning_trees(g).front();

  // lift: edge flows with boundary equal to the external momenta,
  // supported on the tree; solved by peeling leaves
  std::vector<std::vector<double>> lift(m, std::vector<double>(d, 0.0));
  {
    std::vector<std::vector<double>> residual(g.vertex_count(), std::vector<double>(d, 0.0));
    for (int vtx = 0; vtx < g.vertex_count(); ++vtx)
      for (int i = 0; i < d; ++i) residual[vtx][i] = to_double((*g.momenta)[vtx][i]);
    std::vector<bool> edge_done(m, true);
    std::vector<bool> vertex_done(g.vertex_count(), false);
    for (int e : edge_list(tree)) edge_done[e] = false;
    for (int round = 0; round < g.vertex_count(); ++round) {
      for (int vtx = 0; vtx < g.vertex_count(); ++vtx) {
        if (vertex_done[vtx]) continue;
        int incident = -1, count = 0;
        for (int e = 0; e < m; ++e) {
          if (edge_done[e]) continue;
          if (g.edges[e].source == vtx || g.edges[e].target == vtx) {
            incident = e;
            ++count;
          }
        }
        if (count != 1) continue;
        const auto& ed = g.edges[incident];
        if (ed.target == vtx) {
          for (int i = 0; i < d; ++i) {
            lift[incident][i] = residual[vtx][i];
            residual[ed.source][i] += residual[vtx][i];
          }
        } else {
          for (int i = 0; i < d; ++i) {
            lift[incident][i] = -residual[vtx][i];
            residual[ed.target][i] -= -residual[vtx][i];
          }
        }
        edge_done[incident] = true;
        vertex_done[vtx] = true;
      }
    }
  }

  // fundamental cycles: one per non-tree edge, signs along the tree path
  std::vector<std::vector<int>> cycles;
  {
    // parent structure of the tree from vertex 0
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<int> order{0};
    std::vector<bool> seen(g.vertex_count(), false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int vtx = order[head];
      for (int e : edge_list(tree)) {
        const auto& ed = g.edges[e];
        int other = -1;
        if (ed.source == vtx && !seen[ed.target]) other = ed.target;
        if (ed.target == vtx && !seen[ed.source]) other = ed.source;
        if (other < 0) continue;
        seen[other] = true;
        parent[other] = vtx;
        parent_edge[other] = e;
        order.push_back(other);
      }
    }
    auto path_to_root = [&](int vtx) {
      std::vector<int> verts;
      while (vtx != -1) {
        verts.push_back(vtx);
        vtx = parent[vtx];
      }
      return verts;
    };
    for (int e = 0; e < m; ++e) {
      if (tree & (EdgeSet{1} << e)) continue;
      std::vector<int> cyc(m, 0);
      cyc[e] = 1;
      const auto& ed = g.edges[e];
      if (ed.source != ed.target) {
        auto pa = path_to_root(ed.source);
        auto pb = path_to_root(ed.target);
        // strip the common tail to get the tree path target -> source
        while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
          pa.pop_back();
          pb.pop_back();
        }
        // walk target up to the meet, then down to source
        for (std::size_t i = 0; i + 1 < pb.size(); ++i) {
          int lo_v = pb[i];
          int pe = parent_edge[lo_v];
          cyc[pe] += g.edges[pe].target == lo_v ? -1 : 1;
        }
        for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
          int lo_v = pa[i];
          int pe = parent_edge[lo_v];
          cyc[pe] += g.edges[pe].target == lo_v ? 1 : -1;
        }
      }
      cycles.push_back(std::move(cyc));
    }
  }

  std::vector<double> mass2(m);
  for (int e = 0; e < m; ++e) mass2[e] = to_double(g.edges[e].mass2);

  if (ell == 0) {
    QuadResult r;
    double v = 1;
    for (int e = 0; e < m; ++e) {
      double q = mass2[e];
      for (int i = 0; i < d; ++i) q += lift[e][i] * lift[e][i];
      v /= q;
    }
    r.value = v;
    r.evals = 1;
    return r;
  }

  auto integrand = [&](const std::vector<double>& k) {
    if (out_of_range(k)) return 0.0;
    double v = 1;
    for (int e = 0; e < m; ++e) {
      double q = mass2[e];
      for (int i = 0; i < d; ++i) {
        double pe = lift[e][i];
        for (int j = 0; j < ell; ++j) pe += cycles[j][e] * k[j * d + i];
        q += pe * pe;
      }
      v /= q;
    }
    return v;
  };

  if (cfg.method == QuadratureConfig::Method::tensor) {
    if (dims > 3)
      throw ValidationError("tensor method supports at most 3 dimensions; use montecarlo");
    return integrate_rn(integrand, dims, cfg);
  }

  // center on the minimizer of -log integrand = sum log Q_e
  Smooth target;
  auto props = [&](const std::vector<double>& k) {
    std::vector<std::vector<double>> pe(m, std::vector<double>(d));
    std::vector<double> qe(m);
    for (int e = 0; e < m; ++e) {
      double q = mass2[e];
      for (int i = 0; i < d; ++i) {
        double v = lift[e][i];
        for (int j = 0; j < ell; ++j) v += cycles[j][e] * k[j * d + i];
        pe[e][i] = v;
        q += v * v;
      }
      qe[e] = q;
    }
    return std::pair(pe, qe);
  };
  target.value = [&](const std::vector<double>& k) {
    auto [pe, qe] = props(k);
    double s = 0;
    for (int e = 0; e < m; ++e) s += std::log(qe[e]);
    return s;
  };
  target.gradient = [&](const std::vector<double>& k) {
    auto [pe, qe] = props(k);
    std::vector<double> grad(dims, 0.0);
    for (int e = 0; e < m; ++e)
      for (int j = 0; j < ell; ++j)
        for (int i = 0; i < d; ++i)
          grad[j * d + i] += 2.0 * cycles[j][e] * pe[e][i] / qe[e];
    return grad;
  };
  target.hessian = [&](const std::vector<double>& k) {
    auto [pe, qe] = props(k);
    std::vector<std::vector<double>> h(dims, std::vector<double>(dims, 0.0));
    for (int e = 0; e < m; ++e) {
      for (int j1 = 0; j1 < ell; ++j1)
        for (int j2 = 0; j2 < ell; ++j2)
          for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2) {
              double v = 0;
              if (i1 == i2) v += 2.0 * cycles[j1][e] * cycles[j2][e] / qe[e];
              v -= 4.0 * cycles[j1][e] * cycles[j2][e] * pe[e][i1] * pe[e][i2] / (qe[e] * qe[e]);
              h[j1 * d + i1][j2 * d + i2] += v;
            }
    }
    return h;
  };
  CenterInfo center = find_center(target, dims);
  // heavy polynomial tails: Cauchy proposal keeps the weights bounded
  return integrate_mc(integrand, center.x, center.chol, 1.0, cfg);
}

}  // namespace feyntope
