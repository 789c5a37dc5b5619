#include "feyntope/eps_rational.hpp"

#include <algorithm>

#include "feyntope/errors.hpp"

namespace feyntope {

Rat EpsPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

int EpsPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return static_cast<int>(c_.size());
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
  EpsPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const {
  EpsPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
  if (is_zero() || o.is_zero()) return EpsPoly();
  EpsPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

EpsPoly& EpsPoly::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

EpsPoly EpsPoly::divide_exact(const EpsPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (is_zero()) return EpsPoly();
  std::vector<Rat> rem = c_;
  const auto& d = divisor.c_;
  const int dd = divisor.degree();
  if (degree() < dd) throw Error("polynomial division is not exact");
  std::vector<Rat> quot(c_.size() - d.size() + 1, Rat(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Rat q = rem[k + dd] / d[dd];
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error("polynomial division is not exact");
  EpsPoly out;
  out.c_ = std::move(quot);
  out.trim();
  return out;
}

bool EpsPoly::divisible_by(const EpsPoly& divisor) const {
  if (is_zero()) return true;
  if (divisor.degree() == 1) {
    // linear c0 + c1 x: root test
    if (divisor.c_[1] == 0) return true;  // constant, never happens here
    return eval(-divisor.c_[0] / divisor.c_[1]) == 0;
  }
  try {
    divide_exact(divisor);
    return true;
  } catch (const Error&) {
    return false;
  }
}

LinearFactor normalize_factor(const Rat& c0, const Rat& c1) {
  if (c0 == 0 && c1 == 0) throw Error("zero linear factor");
  // scale so the first nonzero coefficient is 1; the scale moves to the
  // numerator at call sites
  Rat s = c1 != 0 ? c1 : c0;
  return LinearFactor{c0 / s, c1 / s};
}

void EpsRational::mul_poly(const EpsPoly& p) {
  num_ = num_ * p;
  reduce();
}

void EpsRational::div_factor(const Rat& c0, const Rat& c1) {
  if (num_.is_zero()) return;
  LinearFactor f = normalize_factor(c0, c1);
  Rat scale = c1 != 0 ? c1 : c0;
  num_ *= Rat(1) / scale;
  den_.push_back(f);
  reduce();
}

void EpsRational::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<LinearFactor> keep;
  for (const auto& f : den_) {
    EpsPoly fp = f.poly();
    if (fp.degree() == 0) {
      num_ *= Rat(1) / fp.coeff(0);
      continue;
    }
    if (num_.divisible_by(fp))
      num_ = num_.divide_exact(fp);
    else
      keep.push_back(f);
  }
  den_ = std::move(keep);
  std::sort(den_.begin(), den_.end(), [](const LinearFactor& a, const LinearFactor& b) {
    return std::pair(a.c0, a.c1) < std::pair(b.c0, b.c1);
  });
}

EpsPoly EpsRational::denominator_poly() const {
  EpsPoly d = EpsPoly::one();
  for (const auto& f : den_) d = d * f.poly();
  return d;
}

EpsRational EpsRational::operator*(const EpsRational& o) const {
  EpsRational r;
  r.num_ = num_ * o.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  r.reduce();
  return r;
}

EpsRational EpsRational::operator+(const EpsRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // common denominator: per distinct factor the max multiplicity
  auto count = [](const std::vector<LinearFactor>& v) {
    std::vector<std::pair<LinearFactor, int>> out;
    for (const auto& f : v) {
      bool found = false;
      for (auto& [g, m] : out)
        if (g.c0 == f.c0 && g.c1 == f.c1) {
          ++m;
          found = true;
          break;
        }
      if (!found) out.emplace_back(f, 1);
    }
    return out;
  };
  auto ca = count(den_), cb = count(o.den_);
  auto mult_of = [](const std::vector<std::pair<LinearFactor, int>>& c, const LinearFactor& f) {
    for (const auto& [g, m] : c)
      if (g.c0 == f.c0 && g.c1 == f.c1) return m;
    return 0;
  };
  std::vector<std::pair<LinearFactor, int>> lcm = ca;
  for (const auto& [f, m] : cb) {
    bool found = false;
    for (auto& [g, mm] : lcm)
      if (g.c0 == f.c0 && g.c1 == f.c1) {
        mm = std::max(mm, m);
        found = true;
        break;
      }
    if (!found) lcm.emplace_back(f, m);
  }
  EpsRational r;
  EpsPoly na = num_, nb = o.num_;
  for (const auto& [f, m] : lcm) {
    EpsPoly fp = f.poly();
    for (int k = mult_of(ca, f); k < m; ++k) na = na * fp;
    for (int k = mult_of(cb, f); k < m; ++k) nb = nb * fp;
    for (int k = 0; k < m; ++k) r.den_.push_back(f);
  }
  r.num_ = na + nb;
  r.reduce();
  return r;
}

Rat EpsRational::eval(const Rat& x) const {
  Rat d = 1;
  for (const auto& f : den_) {
    Rat v = f.c0 + f.c1 * x;
    if (v == 0) throw Error("evaluating at a denominator zero");
    d *= v;
  }
  return num_.eval(x) / d;
}

int EpsRational::pole_order() const {
  if (num_.is_zero()) return 0;
  int zeros = 0;
  for (const auto& f : den_)
    if (f.vanishes_at_zero()) ++zeros;
  int ord = zeros - num_.valuation();
  return std::max(ord, 0);
}

std::vector<Rat> laurent_of_rational(const EpsPoly& num, const EpsPoly& den, int min_deg,
                                     int max_deg) {
  if (den.is_zero()) throw Error("Laurent expansion of division by zero");
  std::vector<Rat> out(std::max(0, max_deg - min_deg + 1), Rat(0));
  if (num.is_zero()) return out;
  const int vn = num.valuation();
  const int vd = den.valuation();
  const int lead = vn - vd;  // lowest possible degree
  // series of (num/eps^vn) / (den/eps^vd) up to max_deg - lead
  const int len = std::max(0, max_deg - lead + 1);
  std::vector<Rat> a(len, Rat(0)), b(len, Rat(0)), q(len, Rat(0));
  for (int i = 0; i < len; ++i) {
    a[i] = num.coeff(vn + i);
    b[i] = den.coeff(vd + i);
  }
  for (int i = 0; i < len; ++i) {
    Rat s = a[i];
    for (int j = 0; j < i; ++j) s -= q[j] * b[i - j];
    q[i] = s / b[0];
  }
  for (int i = 0; i < len; ++i) {
    int deg = lead + i;
    if (deg >= min_deg && deg <= max_deg) out[deg - min_deg] = q[i];
  }
  return out;
}

std::vector<Rat> EpsRational::laurent(int min_deg, int max_deg) const {
  return laurent_of_rational(num_, denominator_poly(), min_deg, max_deg);
}

}  // namespace feyntope
