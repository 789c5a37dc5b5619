#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "feyntope/errors.hpp"

namespace feyntope {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

// Lattice points, facet normals and relation vectors.  Entries stay tiny
// (bounded by the loop number plus one), int64 is plenty.
using IVec = std::vector<std::int64_t>;

inline Rat parse_rational(const std::string& s) {
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw ValidationError("not a rational \"p/q\" string: '" + s + "'");
  }
}

inline std::string rational_string(const Rat& r) { return r.str(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat dot(const IVec& w, const RatVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += Rat(w[i]) * x[i];
  return s;
}

inline std::int64_t dot(const IVec& w, const IVec& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

}  // namespace feyntope
