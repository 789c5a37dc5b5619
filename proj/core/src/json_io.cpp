#include "feyntope/json_io.hpp"

#include <cstdio>

#include "feyntope/errors.hpp"

namespace feyntope {

std::string float_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

double parse_float(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw ValidationError("trailing characters in float '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("not a float string: '" + s + "'");
  }
}

namespace {

Rat rat_field(const Json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

}  // namespace

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("graph document must be a JSON object");
  Graph g;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ValidationError("graph needs a \"vertices\" array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ValidationError("vertex ids must be strings");
    g.vertices.push_back(v.get<std::string>());
  }
  auto vertex_index = [&](const std::string& id) {
    for (int i = 0; i < g.vertex_count(); ++i)
      if (g.vertices[i] == id) return i;
    throw ValidationError("unknown vertex id '" + id + "'");
  };
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ValidationError("graph needs an \"edges\" array");
  for (const auto& e : j["edges"]) {
    Edge edge;
    if (!e.contains("id") || !e.contains("source") || !e.contains("target"))
      throw ValidationError("each edge needs id, source, target");
    edge.id = e["id"].get<std::string>();
    edge.source = vertex_index(e["source"].get<std::string>());
    edge.target = vertex_index(e["target"].get<std::string>());
    edge.mass2 = e.contains("mass2") ? rat_field(e["mass2"], "mass2") : Rat(0);
    g.edges.push_back(std::move(edge));
  }
  if (j.contains("momenta")) {
    if (!j["momenta"].is_object()) throw ValidationError("\"momenta\" must map vertex ids to vectors");
    std::vector<RatVec> mom(g.vertex_count());
    std::size_t dim = 0;
    for (const auto& [vid, vec] : j["momenta"].items()) {
      int idx = vertex_index(vid);
      RatVec p;
      for (const auto& c : vec) p.push_back(rat_field(c, "momentum component"));
      if (dim == 0) dim = p.size();
      mom[idx] = std::move(p);
    }
    if (dim == 0) throw ValidationError("momenta present but empty");
    for (auto& p : mom)
      if (p.empty()) p.assign(dim, Rat(0));
    g.momenta = std::move(mom);
  }
  validate_graph(g);
  return g;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices;
  j["edges"] = Json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"id", e.id},
                          {"source", g.vertices[e.source]},
                          {"target", g.vertices[e.target]},
                          {"mass2", rational_string(e.mass2)}});
  }
  if (g.momenta) {
    Json m = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      Json vec = Json::array();
      for (const auto& c : (*g.momenta)[v]) vec.push_back(rational_string(c));
      m[g.vertices[v]] = std::move(vec);
    }
    j["momenta"] = std::move(m);
  }
  return j;
}

Json polynomial_to_json(const GradedPolynomial& p, const Graph& g) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) {
    terms.push_back({{"exponents", e},
                     {"monomial", monomial_string(e, g)},
                     {"label", c.label},
                     {"value", rational_string(c.value)}});
  }
  return Json{{"degree", p.degree}, {"terms", std::move(terms)},
              {"pretty", polynomial_string(p, g)}};
}

Json lattice_to_json(const LatticeSet& a) {
  Json points = Json::array();
  for (const auto& p : a.points) points.push_back(p);
  return Json{{"n", a.n},
              {"points", std::move(points)},
              {"labels", a.labels},
              {"reduced", a.reduced},
              {"generates_lattice", a.generates_lattice}};
}

LatticeSet lattice_from_json(const Json& j) {
  LatticeSet a;
  a.n = j.at("n").get<int>();
  for (const auto& p : j.at("points")) a.points.push_back(p.get<IVec>());
  a.labels = j.at("labels").get<std::vector<std::string>>();
  a.reduced = j.value("reduced", false);
  a.generates_lattice = j.value("generates_lattice", true);
  return a;
}

namespace {

const char* source_name(FacetNormal::Source s) {
  switch (s) {
    case FacetNormal::Source::subgraph: return "subgraph";
    case FacetNormal::Source::self_loop: return "self_loop";
    case FacetNormal::Source::upper: return "upper";
    case FacetNormal::Source::hull: return "hull";
  }
  return "hull";
}

Json facet_to_json(const FacetNormal& f, const Graph* g) {
  Json j{{"w", f.w}, {"source", source_name(f.source)}};
  if (g && !f.edge_indices.empty()) {
    Json edges = Json::array();
    for (int i : f.edge_indices) edges.push_back(g->edges[i].id);
    j["edges"] = std::move(edges);
  }
  return j;
}

}  // namespace

Json facets_to_json(const std::vector<FacetNormal>& normals, const Graph& g) {
  Json out = Json::array();
  for (const auto& f : normals) out.push_back(facet_to_json(f, &g));
  return out;
}

Json convergence_to_json(const ConvergenceReport& rep) {
  Json vio = Json::array();
  for (const auto& [f, v] : rep.violations)
    vio.push_back({{"w", f.w}, {"source", source_name(f.source)}, {"pairing", rational_string(v)}});
  Json wit = Json::array();
  for (const auto& w : rep.pole_witnesses)
    wit.push_back({{"edges", w.edges},
                   {"loops", w.loops},
                   {"edge_count", w.edge_count},
                   {"value", w.value.str()},
                   {"self_loop", w.self_loop}});
  return Json{{"converges", rep.converges},
              {"self_loop_divergent", rep.self_loop_divergent},
              {"overall_check", rational_string(rep.overall_check)},
              {"violations", std::move(vio)},
              {"pole_witnesses", std::move(wit)}};
}

Json gkz_to_json(const GkzSystem& sys) {
  Json box = Json::array();
  for (const auto& r : sys.box_operators) {
    Json coeffs = Json::array();
    for (const auto& c : r.coeff) coeffs.push_back(c.str());
    box.push_back(std::move(coeffs));
  }
  Json euler = Json::array();
  for (const auto& row : sys.euler) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.str());
    euler.push_back(std::move(r));
  }
  Json beta = Json::array();
  for (const auto& b : sys.beta) beta.push_back(rational_string(b));
  return Json{{"box_operators", std::move(box)}, {"euler", std::move(euler)},
              {"beta", std::move(beta)}};
}

Json reduction_to_json(const ReductionResult& red) {
  Json terms = Json::array();
  for (const auto& t : red.terms) {
    Json num = Json::array();
    for (const auto& c : t.coefficient.num().coeffs()) num.push_back(rational_string(c));
    Json den = Json::array();
    const EpsPoly den_poly = t.coefficient.denominator_poly();
    for (const auto& c : den_poly.coeffs()) den.push_back(rational_string(c));
    Json mono = Json::object();
    for (const auto& [label, k] : t.monomial) mono[label] = k;
    Json base = Json::array(), dir = Json::array();
    for (const auto& x : t.alpha.base) base.push_back(rational_string(x));
    for (const auto& x : t.alpha.dir) dir.push_back(rational_string(x));
    terms.push_back({{"coefficient", Json{{"num", std::move(num)}, {"den", std::move(den)}}},
                     {"monomial", std::move(mono)},
                     {"alpha", Json{{"base", std::move(base)}, {"dir", std::move(dir)}}}});
  }
  return Json{{"terms", std::move(terms)},
              {"pole_order_bound", red.pole_order_bound},
              {"steps", red.steps}};
}

Json laurent_to_json(const LaurentSeries& s) {
  Json coeff = Json::object();
  for (const auto& [deg, cv] : s.coefficients) {
    coeff[std::to_string(deg)] =
        Json{{"value", float_string(cv.first)}, {"abs_error", float_string(cv.second)}};
  }
  Json j{{"min_degree", s.min_degree()},
         {"max_degree", s.max_degree()},
         {"coefficients", std::move(coeff)}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

LaurentSeries laurent_from_json(const Json& j) {
  LaurentSeries s;
  for (const auto& [key, cv] : j.at("coefficients").items()) {
    s.coefficients[std::stoi(key)] = {parse_float(cv.at("value").get<std::string>()),
                                      parse_float(cv.at("abs_error").get<std::string>())};
  }
  s.note = j.value("note", "");
  return s;
}

}  // namespace feyntope
