#pragma once

#include <nlohmann/json.hpp>

#include "feyntope/amplitude.hpp"
#include "feyntope/continuation.hpp"
#include "feyntope/gamma_series.hpp"
#include "feyntope/graph.hpp"
#include "feyntope/lattice.hpp"
#include "feyntope/polytope.hpp"
#include "feyntope/symanzik.hpp"

namespace feyntope {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings, floats as decimal strings with an
// explicit exponent; integers are plain JSON numbers.
std::string float_string(double v);
double parse_float(const std::string& s);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

Json polynomial_to_json(const GradedPolynomial& p, const Graph& g);
Json lattice_to_json(const LatticeSet& a);
LatticeSet lattice_from_json(const Json& j);
Json facets_to_json(const std::vector<FacetNormal>& normals, const Graph& g);
Json convergence_to_json(const ConvergenceReport& rep);
Json gkz_to_json(const GkzSystem& sys);
Json reduction_to_json(const ReductionResult& red);
Json laurent_to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

}  // namespace feyntope
