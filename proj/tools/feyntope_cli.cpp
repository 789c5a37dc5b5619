// Command-line front end: graph JSON in, pipeline results as JSON out.
//
// Subcommands: symanzik, polytope, classify, gkz, evaluate, oracle.
// Exit codes: 0 success, 2 input validation, 3 resonant dead-end,
// 4 tolerance failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "feyntope/amplitude.hpp"
#include "feyntope/json_io.hpp"

namespace fs = std::filesystem;
using namespace feyntope;

namespace {

struct CommonArgs {
  std::string graph_path;
  std::string graphs_dir;
  std::string out_path;
};

struct QuadArgs {
  std::string method = "tensor";
  double rel_tol = 1e-9;
  long long max_evals = 200'000'000;
  std::uint64_t seed = 20240915;

  QuadratureConfig config() const {
    QuadratureConfig cfg;
    if (method == "tensor")
      cfg.method = QuadratureConfig::Method::tensor;
    else if (method == "mc" || method == "montecarlo")
      cfg.method = QuadratureConfig::Method::montecarlo;
    else
      throw ValidationError("--method must be tensor or mc");
    cfg.rel_tol = rel_tol;
    cfg.max_evals = max_evals;
    cfg.seed = seed;
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool allow_dir = true) {
  auto* g = cmd->add_option("--graph", args.graph_path, "graph JSON file");
  if (allow_dir) {
    auto* d = cmd->add_option("--graphs-dir", args.graphs_dir,
                              "directory of graph JSON files; runs the command on each");
    g->excludes(d);
  } else {
    g->required();
  }
  cmd->add_option("--out", args.out_path, "output path (stdout when absent)");
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

void emit(const Json& j, const CommonArgs& args) {
  if (args.out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw Error("cannot open output path '" + args.out_path + "'");
    out << j.dump(2) << "\n";
  }
}

// run `fn` per graph; a directory run produces { filename: result }
void run_per_graph(const CommonArgs& args, const std::function<Json(const Graph&)>& fn) {
  if (!args.graphs_dir.empty()) {
    Json out = Json::object();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.graphs_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out[f.filename().string()] = fn(load_graph(f.string()));
    emit(out, args);
    return;
  }
  if (args.graph_path.empty()) throw ValidationError("--graph or --graphs-dir is required");
  emit(fn(load_graph(args.graph_path)), args);
}

Rat parse_dim(const std::string& s) {
  // --dim takes the spacetime dimension D as a rational
  Rat d = parse_rational(s);
  return d / 2;
}

Json symanzik_json(const Graph& g) {
  AmplitudePipeline pipe = build_pipeline(g);
  Json dropped = Json::array();
  for (const auto& e : pipe.dropped) dropped.push_back(monomial_string(e, g));
  return Json{{"psi", polynomial_to_json(pipe.psi, g)},
              {"q", polynomial_to_json(pipe.q, g)},
              {"lattice_set", lattice_to_json(pipe.lattice)},
              {"dropped_monomials", std::move(dropped)}};
}

Json polytope_json(const Graph& g) {
  AmplitudePipeline pipe = build_pipeline(g);
  bool degenerate = false;
  Int vol = normalized_volume(pipe.lattice, &degenerate);
  return Json{{"facets", facets_to_json(pipe.normals, g)},
              {"from", pipe.hull_normals ? "hull" : "subgraphs"},
              {"normalized_volume", vol.str()},
              {"degenerate", degenerate},
              {"generates_lattice", pipe.lattice.generates_lattice}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKZ/toric toolkit for Feynman parametric integrals"};
  app.require_subcommand(1);

  CommonArgs sym_args, poly_args, cls_args, gkz_args, eval_args, orc_args;
  std::string cls_dim, gkz_dim, eval_dim, orc_dim;
  int eval_order = 2;
  bool eval_oracle = false;
  QuadArgs eval_quad, orc_quad;

  auto* sym = app.add_subcommand("symanzik", "Symanzik polynomials and the lattice point set");
  add_common(sym, sym_args);

  auto* poly = app.add_subcommand("polytope", "facet normals and normalized volume");
  add_common(poly, poly_args);

  auto* cls = app.add_subcommand("classify", "convergence and predicted pole locus at a given D");
  add_common(cls, cls_args);
  cls->add_option("--dim", cls_dim, "spacetime dimension D (rational)")->required();

  auto* gkz = app.add_subcommand("gkz", "GKZ system: box operators, Euler matrix, beta");
  add_common(gkz, gkz_args);
  gkz->add_option("--dim", gkz_dim, "spacetime dimension D (rational)")->required();

  auto* ev = app.add_subcommand("evaluate", "eps-expansion of the parametric amplitude at D + 2 eps");
  add_common(ev, eval_args, /*allow_dir=*/false);
  ev->add_option("--dim", eval_dim, "spacetime dimension D (rational)")->required();
  ev->add_option("--order", eval_order, "highest eps power to keep (default 2)");
  ev->add_option("--method", eval_quad.method, "tensor|mc");
  ev->add_option("--rel-tol", eval_quad.rel_tol, "quadrature relative tolerance");
  ev->add_option("--max-evals", eval_quad.max_evals, "quadrature evaluation budget");
  ev->add_option("--seed", eval_quad.seed, "Monte Carlo seed");
  ev->add_flag("--oracle", eval_oracle, "cross-check against the momentum-space oracle");

  auto* orc = app.add_subcommand("oracle", "direct momentum-space amplitude (oracle scale)");
  add_common(orc, orc_args, /*allow_dir=*/false);
  orc->add_option("--dim", orc_dim, "spacetime dimension D; must match the momenta");
  orc->add_option("--method", orc_quad.method, "tensor|mc");
  orc->add_option("--rel-tol", orc_quad.rel_tol, "quadrature relative tolerance");
  orc->add_option("--max-evals", orc_quad.max_evals, "quadrature evaluation budget");
  orc->add_option("--seed", orc_quad.seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);

    if (*sym) run_per_graph(sym_args, symanzik_json);
    if (*poly) run_per_graph(poly_args, polytope_json);
    if (*cls) {
      const Rat d_half = parse_dim(cls_dim);
      run_per_graph(cls_args, [&](const Graph& g) {
        return convergence_to_json(amplitude_pole_report(g, d_half));
      });
    }
    if (*gkz) {
      const Rat d_half = parse_dim(gkz_dim);
      run_per_graph(gkz_args, [&](const Graph& g) {
        AmplitudePipeline pipe = build_pipeline(g);
        GkzSystem sys = gkz_system(pipe.lattice, amplitude_beta(d_half, pipe.lattice.n));
        Json j = gkz_to_json(sys);
        bool degenerate = false;
        j["normalized_volume"] = normalized_volume(pipe.lattice, &degenerate).str();
        j["degenerate"] = degenerate;
        if (!pipe.lattice.generates_lattice)
          j["note"] = "non-saturated configuration: solution-space dimension claims inapplicable";
        return j;
      });
    }
    if (*ev) {
      const Rat d_half = parse_dim(eval_dim);
      const QuadratureConfig cfg = eval_quad.config();
      const Graph g = load_graph(eval_args.graph_path);
      AmplitudeExpansion amp = assemble_amplitude_expansion(g, d_half, eval_order, cfg);
      Json j{{"series", laurent_to_json(amp.series)},
             {"gamma_series", laurent_to_json(amp.gamma_series)},
             {"reduction", reduction_to_json(amp.reduction)}};
      if (eval_oracle) {
        QuadResult oracle = momentum_space_amplitude(g, cfg);
        // A = pi^{D ell / 2} I(0, D/2), so the comparison goes through
        // the pi power
        const int ell = loop_number(g);
        const double pi_pow = std::pow(3.14159265358979323846, to_double(d_half) * ell);
        j["oracle"] = Json{{"momentum_space", float_string(oracle.value)},
                           {"abs_error", float_string(oracle.abs_error)},
                           {"parametric_times_pi_power",
                            float_string(amp.series.value(0) * pi_pow)}};
        if (!oracle.converged) {
          emit(j, eval_args);
          throw ToleranceError("momentum-space oracle did not converge");
        }
      }
      emit(j, eval_args);
      if (!amp.all_converged) throw ToleranceError("a leaf quadrature missed its tolerance");
    }
    if (*orc) {
      const QuadratureConfig cfg = orc_quad.config();
      const Graph g = load_graph(orc_args.graph_path);
      if (!orc_dim.empty()) {
        const Rat d = parse_rational(orc_dim);
        if (d != g.momentum_dim())
          throw ValidationError("--dim must equal the momentum dimension for the oracle");
      }
      QuadResult r = momentum_space_amplitude(g, cfg);
      emit(Json{{"value", float_string(r.value)},
                {"abs_error", float_string(r.abs_error)},
                {"converged", r.converged},
                {"evals", r.evals}},
           orc_args);
      if (!r.converged) throw ToleranceError("oracle quadrature did not converge");
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResonantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ToleranceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
