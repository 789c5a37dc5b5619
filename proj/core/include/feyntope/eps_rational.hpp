#pragma once

#include <vector>

#include "feyntope/rational.hpp"

namespace feyntope {

// Dense univariate polynomial in eps over Q, low degree.
class EpsPoly {
 public:
  EpsPoly() = default;
  explicit EpsPoly(Rat c0) : c_{std::move(c0)} { trim(); }
  EpsPoly(Rat c0, Rat c1) : c_{std::move(c0), std::move(c1)} { trim(); }
  static EpsPoly zero() { return EpsPoly(); }
  static EpsPoly one() { return EpsPoly(Rat(1)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
  Rat eval(const Rat& x) const;

  // lowest nonzero power of eps; degree()+1 == 0 means undefined for zero
  int valuation() const;

  EpsPoly operator+(const EpsPoly& o) const;
  EpsPoly operator-(const EpsPoly& o) const;
  EpsPoly operator*(const EpsPoly& o) const;
  EpsPoly& operator*=(const Rat& s);

  // exact division; throws Error when the remainder is nonzero
  EpsPoly divide_exact(const EpsPoly& divisor) const;
  bool divisible_by(const EpsPoly& divisor) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Linear factor c0 + c1*eps, kept primitive with a canonical sign.
struct LinearFactor {
  Rat c0, c1;
  bool vanishes_at_zero() const { return c0 == 0; }
  EpsPoly poly() const { return EpsPoly(c0, c1); }
};

LinearFactor normalize_factor(const Rat& c0, const Rat& c1);

// Rational function of eps whose denominator is a product of linear
// factors (every denominator in the contiguity recursion arises as a
// pairing <w, alpha + eps u>).  Kept in lowest terms: no denominator
// factor divides the numerator.
class EpsRational {
 public:
  EpsRational() = default;  // zero
  explicit EpsRational(EpsPoly num) : num_(std::move(num)) {}
  static EpsRational one() { return EpsRational(EpsPoly::one()); }

  bool is_zero() const { return num_.is_zero(); }
  const EpsPoly& num() const { return num_; }
  const std::vector<LinearFactor>& den() const { return den_; }

  // multiply by a polynomial / divide by a linear factor
  void mul_poly(const EpsPoly& p);
  void div_factor(const Rat& c0, const Rat& c1);

  EpsRational operator+(const EpsRational& o) const;
  EpsRational operator*(const EpsRational& o) const;

  Rat eval(const Rat& x) const;  // throws on a denominator zero

  // order of the pole at eps = 0 (0 when finite there)
  int pole_order() const;

  // exact Laurent coefficients about eps = 0 on [min_deg, max_deg]
  std::vector<Rat> laurent(int min_deg, int max_deg) const;

  EpsPoly denominator_poly() const;

 private:
  void reduce();
  EpsPoly num_;
  std::vector<LinearFactor> den_;
};

// Laurent window of num/den about eps = 0 for arbitrary polynomials
// (den != 0); exposed for tests and the gamma-series code.
std::vector<Rat> laurent_of_rational(const EpsPoly& num, const EpsPoly& den, int min_deg,
                                     int max_deg);

}  // namespace feyntope
