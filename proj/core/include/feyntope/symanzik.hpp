#pragma once

#include <map>
#include <string>
#include <vector>

#include "feyntope/graph.hpp"
#include "feyntope/rational.hpp"

namespace feyntope {

// Exponent vector over the edge variables t_1..t_n.
using ExpVec = std::vector<int>;

// Coefficient of one monomial: a positive rational plus a symbolic tag
// naming the lattice point it will become (P_S or Q_T).
struct Coefficient {
  std::string label;
  Rat value;
};

// Homogeneous polynomial in the t variables with labeled coefficients.
struct GradedPolynomial {
  int degree = 0;
  std::map<ExpVec, Coefficient> terms;

  int variable_count() const {
    return terms.empty() ? 0 : static_cast<int>(terms.begin()->first.size());
  }
  bool is_homogeneous() const {
    for (const auto& [e, c] : terms) {
      int s = 0;
      for (int x : e) s += x;
      if (s != degree) return false;
    }
    return true;
  }
  double eval(const std::vector<double>& t) const;
  Rat eval(const RatVec& t) const;
};

std::string monomial_string(const ExpVec& e, const Graph& g);
std::string polynomial_string(const GradedPolynomial& p, const Graph& g);

// Psi_Gamma = sum over spanning trees of prod_{e not in S} t_e.  All
// coefficients are 1; label "S(...)" lists the complement edges.
GradedPolynomial first_symanzik(const Graph& g);

// Q_Gamma = P_Gamma + (sum_e t_e m_e^2) Psi_Gamma, with the momentum part
// P_Gamma = sum over cuts of P_C prod_{e in C} t_e and P_C the squared
// norm of the momentum through the cut.  Monomials shared between the two
// parts are merged into one coefficient Q_T; coefficients that collapse
// to zero (massless edges, vanishing momenta) are dropped and reported
// through `dropped` when given.
GradedPolynomial q_polynomial(const Graph& g, std::vector<ExpVec>* dropped = nullptr);

// Momentum part alone (useful for structural tests).
GradedPolynomial momentum_polynomial(const Graph& g);

}  // namespace feyntope
