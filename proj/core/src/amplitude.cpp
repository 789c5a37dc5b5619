#include "feyntope/amplitude.hpp"

#include <algorithm>
#include <cmath>

#include "feyntope/errors.hpp"
#include "feyntope/parallel.hpp"

namespace feyntope {

AmplitudePipeline build_pipeline(const Graph& g) {
  validate_graph(g);
  AmplitudePipeline pipe;
  pipe.graph = g;
  pipe.psi = first_symanzik(g);
  pipe.q = q_polynomial(g, &pipe.dropped);
  const int ell = loop_number(g);
  pipe.lattice = reduce_lattice(build_point_set(pipe.psi, pipe.q), ell);
  if (pipe.dropped.empty()) {
    pipe.normals = facet_normals(g);
  } else {
    // the subgraph facet description covers the full monomial set;
    // with dropped monomials fall back to the exact hull of what is left
    pipe.normals = brute_force_facets(pipe.lattice);
    pipe.hull_normals = true;
  }
  pipe.kinematics = kinematic_point_from(pipe.psi, pipe.q);
  return pipe;
}

QuadResult evaluate_reduction_at(const ReductionResult& red, const KEvaluator& eval,
                                 const KinematicPoint& p, const Rat& eps) {
  QuadResult total;
  total.value = 0;
  total.abs_error = 0;
  for (const auto& term : red.terms) {
    const Rat coef = term.coefficient.eval(eps);
    Rat mono(1);
    for (const auto& [label, k] : term.monomial)
      for (int i = 0; i < k; ++i) mono *= p.at(label);
    RatVec alpha = term.alpha.base;
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += eps * term.alpha.dir[i];
    QuadResult leaf = eval.integral(alpha);
    const double factor = to_double(coef * mono);
    total.value += factor * leaf.value;
    total.abs_error += std::abs(factor) * leaf.abs_error;
    total.evals += leaf.evals;
    total.converged = total.converged && leaf.converged;
  }
  return total;
}

AmplitudeExpansion assemble_amplitude_expansion(const AmplitudePipeline& pipe,
                                                const KEvaluator& eval, const Rat& d_half,
                                                int order) {
  const int n = pipe.lattice.n;
  const int ell = loop_number(pipe.graph);

  AffineAlpha alpha;
  alpha.base.assign(n + 1, Rat(1));
  alpha.base[0] = d_half;
  alpha.dir.assign(n + 1, Rat(0));
  alpha.dir[0] = 1;

  AmplitudeExpansion out;
  out.reduction = reduce_to_interior(alpha, pipe.lattice, eval.normals());

  // exact Laurent windows of the coefficients
  struct TermPlan {
    std::vector<Rat> laurent;  // degrees val..s_max
    int val = 0;
    double monomial = 1;
    int taylor_orders = 0;
  };

  int min_val = 0;
  for (const auto& t : out.reduction.terms)
    min_val = std::min(min_val, -t.coefficient.pole_order());

  out.gamma_series = gamma_ratio_series(d_half, Rat(1), ell, n, order - min_val);
  const int gamma_val = out.gamma_series.coefficients.empty()
                            ? 0
                            : out.gamma_series.min_degree();
  const int s_max = order - gamma_val;  // needed K-series depth

  std::vector<TermPlan> plans;
  for (const auto& t : out.reduction.terms) {
    TermPlan plan;
    plan.val = -t.coefficient.pole_order();
    {
      // valuation can exceed -pole_order when the numerator carries eps
      const auto probe = t.coefficient.laurent(plan.val, s_max);
      plan.laurent = probe;
    }
    Rat mono(1);
    for (const auto& [label, k] : t.monomial)
      for (int i = 0; i < k; ++i) mono *= pipe.kinematics.at(label);
    plan.monomial = to_double(mono);
    plan.taylor_orders = std::max(0, s_max - plan.val) + 1;
    plans.push_back(std::move(plan));
  }

  // leaf Taylor coefficients, evaluated in parallel into fixed slots
  struct Task {
    int term = 0;
    int k = 0;
  };
  std::vector<Task> tasks;
  for (std::size_t j = 0; j < plans.size(); ++j)
    for (int k = 0; k < plans[j].taylor_orders; ++k)
      tasks.push_back({static_cast<int>(j), k});
  std::vector<QuadResult> taylor(tasks.size());
  std::vector<std::string> failures(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& term = out.reduction.terms[tasks[i].term];
    try {
      taylor[i] = eval.taylor_coeff(term.alpha.base, term.alpha.dir, tasks[i].k);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  });
  for (const auto& f : failures)
    if (!f.empty()) throw Error("leaf evaluation failed: " + f);

  // S(eps) = sum_j Laurent(coef_j) * P^m_j * K_j(eps), then Gamma ratio
  std::map<int, std::pair<double, double>> s_series;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& plan = plans[tasks[i].term];
    const QuadResult& kc = taylor[i];
    out.all_converged = out.all_converged && kc.converged;
    for (std::size_t d = 0; d < plan.laurent.size(); ++d) {
      const int deg = plan.val + static_cast<int>(d) + tasks[i].k;
      if (deg > s_max) continue;
      const double c = to_double(plan.laurent[d]) * plan.monomial;
      if (c == 0) continue;
      auto& slot = s_series[deg];
      slot.first += c * kc.value;
      slot.second += std::abs(c) * kc.abs_error;
    }
  }

  for (const auto& [gd, gv] : out.gamma_series.coefficients) {
    for (const auto& [sd, sv] : s_series) {
      const int deg = gd + sd;
      if (deg > order) continue;
      auto& slot = out.series.coefficients[deg];
      slot.first += gv.first * sv.first;
      slot.second += std::abs(gv.first) * sv.second + std::abs(sv.first) * gv.second +
                     gv.second * sv.second;
    }
  }
  if (!pipe.dropped.empty())
    out.series.note = "dropped zero-coefficient monomials; hull facets in use";
  return out;
}

AmplitudeExpansion assemble_amplitude_expansion(const Graph& g, const Rat& d_half, int order,
                                                const QuadratureConfig& cfg) {
  AmplitudePipeline pipe = build_pipeline(g);
  KEvaluator eval(pipe.lattice, pipe.kinematics, pipe.normals, cfg);
  return assemble_amplitude_expansion(pipe, eval, d_half, order);
}

}  // namespace feyntope
