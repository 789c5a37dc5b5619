#include "feyntope/symanzik.hpp"

#include <cmath>
#include <sstream>

#include "feyntope/errors.hpp"

namespace feyntope {

double GradedPolynomial::eval(const std::vector<double>& t) const {
  double s = 0;
  for (const auto& [e, c] : terms) {
    double m = to_double(c.value);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= t[i];
    s += m;
  }
  return s;
}

Rat GradedPolynomial::eval(const RatVec& t) const {
  Rat s = 0;
  for (const auto& [e, c] : terms) {
    Rat m = c.value;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= t[i];
    s += m;
  }
  return s;
}

std::string monomial_string(const ExpVec& e, const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << "*";
    out << g.edges[i].id;
    if (e[i] > 1) out << "^" << e[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

std::string polynomial_string(const GradedPolynomial& p, const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) out << " + ";
    if (c.value != 1) out << c.value.str() << "*";
    out << monomial_string(e, g);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

ExpVec complement_exponent(const Graph& g, EdgeSet tree) {
  ExpVec e(g.edge_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i)
    if (!(tree & (EdgeSet{1} << i))) e[i] = 1;
  return e;
}

}  // namespace

GradedPolynomial first_symanzik(const Graph& g) {
  GradedPolynomial psi;
  psi.degree = loop_number(g);
  for (EdgeSet tree : spanning_trees(g)) {
    ExpVec e = complement_exponent(g, tree);
    psi.terms[e] = Coefficient{"S(" + monomial_string(e, g) + ")", Rat(1)};
  }
  return psi;
}

GradedPolynomial momentum_polynomial(const Graph& g) {
  if (!g.momenta) throw ValidationError("momentum polynomial needs external momenta");
  GradedPolynomial p;
  p.degree = loop_number(g) + 1;
  for (const Cut& c : cuts(g)) {
    RatVec sum((*g.momenta)[0].size(), 0);
    for (int v : c.side)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*g.momenta)[v][i];
    Rat pc = 0;
    for (const auto& x : sum) pc += x * x;
    ExpVec e(g.edge_count(), 0);
    for (int i : edge_list(c.edges)) e[i] = 1;
    auto it = p.terms.find(e);
    if (it == p.terms.end())
      p.terms[e] = Coefficient{"T(" + monomial_string(e, g) + ")", pc};
    else
      it->second.value += pc;
  }
  return p;
}

GradedPolynomial q_polynomial(const Graph& g, std::vector<ExpVec>* dropped) {
  if (!g.momenta) throw ValidationError("q_polynomial needs external momenta");
  GradedPolynomial q = momentum_polynomial(g);

  // mass part: (sum_e t_e m_e^2) * Psi.  Zero masses still seed their
  // monomial so a vanishing total is detected and reported as dropped:
  // the full integer-point set of the polytope is spanning-tree
  // complements plus one edge.
  GradedPolynomial psi = first_symanzik(g);
  for (const auto& [se, sc] : psi.terms) {
    for (int i = 0; i < g.edge_count(); ++i) {
      ExpVec e = se;
      e[i] += 1;
      Rat add = g.edges[i].mass2 * sc.value;
      auto it = q.terms.find(e);
      if (it == q.terms.end())
        q.terms[e] = Coefficient{"T(" + monomial_string(e, g) + ")", add};
      else
        it->second.value += add;
    }
  }

  for (auto it = q.terms.begin(); it != q.terms.end();) {
    if (it->second.value == 0) {
      if (dropped) dropped->push_back(it->first);
      it = q.terms.erase(it);
    } else if (it->second.value < 0) {
      throw ValidationError("negative Q coefficient; input is not Euclidean");
    } else {
      ++it;
    }
  }
  if (q.terms.empty())
    throw ValidationError("Q polynomial vanishes: all masses zero and no momentum flow");
  return q;
}

}  // namespace feyntope
