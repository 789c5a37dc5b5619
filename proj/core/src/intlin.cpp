#include "feyntope/intlin.hpp"

#include <algorithm>

namespace feyntope {

int rank(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int rank(IntMat m) {
  RatMat q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    q[i].assign(m[i].begin(), m[i].end());
  return rank(std::move(q));
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

IVec make_primitive(const IVec& v) {
  std::int64_t g = 0;
  auto gcd64 = [](std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (auto x : v) g = gcd64(g, x);
  IVec out = v;
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Column reduction m*U = H with U unimodular; kernel basis = columns of U
// under zero columns of H.  Euclidean-style pivoting keeps entries exact.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  IntMat h = m;
  IntMat u(cols, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_combine = [&](std::size_t dst, std::size_t src, const Int& q) {
    // column dst -= q * column src
    for (std::size_t i = 0; i < rows; ++i) h[i][dst] -= q * h[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(h[i][a], h[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][a], u[i][b]);
  };
  auto col_negate = [&](std::size_t a) {
    for (std::size_t i = 0; i < rows; ++i) h[i][a] = -h[i][a];
    for (std::size_t i = 0; i < cols; ++i) u[i][a] = -u[i][a];
  };

  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // gcd out row r across columns lead..cols-1
    while (true) {
      std::size_t nz = cols;
      for (std::size_t c = lead; c < cols; ++c) {
        if (h[r][c] != 0 && (nz == cols || boost::multiprecision::abs(h[r][c]) <
                                               boost::multiprecision::abs(h[r][nz]))) {
          nz = c;
        }
      }
      if (nz == cols) break;  // row is zero on the tail, move on
      col_swap(lead, nz);
      if (h[r][lead] < 0) col_negate(lead);
      bool clean = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (h[r][c] == 0) continue;
        Int q = h[r][c] / h[r][lead];
        col_combine(c, lead, q);
        if (h[r][c] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }

  std::vector<std::vector<Int>> basis;
  for (std::size_t c = lead; c < cols; ++c) {
    bool zero = true;
    for (std::size_t i = 0; i < rows; ++i)
      if (h[i][c] != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    std::vector<Int> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][c];
    // canonical sign: first nonzero entry positive
    for (const auto& x : v) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool columns_generate_lattice(const IntMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (cols < rows) return rows == 0;
  IntMat h = m;
  // same column reduction as above, no transform needed
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (lead >= cols) return false;
    while (true) {
      std::size_t nz = cols;
      for (std::size_t c = lead; c < cols; ++c) {
        if (h[r][c] != 0 && (nz == cols || boost::multiprecision::abs(h[r][c]) <
                                               boost::multiprecision::abs(h[r][nz]))) {
          nz = c;
        }
      }
      if (nz == cols) return false;  // row unreachable: columns span < Z^rows
      for (std::size_t i = 0; i < rows; ++i) std::swap(h[i][lead], h[i][nz]);
      if (h[r][lead] < 0)
        for (std::size_t i = 0; i < rows; ++i) h[i][lead] = -h[i][lead];
      bool clean = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (h[r][c] == 0) continue;
        Int q = h[r][c] / h[r][lead];
        for (std::size_t i = 0; i < rows; ++i) h[i][c] -= q * h[i][lead];
        if (h[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][lead] != 1) return false;  // elementary divisor > 1
    ++lead;
  }
  return true;
}

std::vector<IVec> rational_nullspace_primitive(const RatMat& m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  RatMat a = m;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    Rat d = a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<IVec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, 0);
    v[free_c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -a[i][free_c];
    // clear denominators, scale to primitive integers
    Int lcm = 1;
    for (const auto& x : v)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    std::vector<Int> iv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rat scaled = v[j] * Rat(lcm);
      iv[j] = boost::multiprecision::numerator(scaled);
    }
    make_primitive(iv);
    IVec out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = iv[j].convert_to<std::int64_t>();
    basis.push_back(std::move(out));
  }
  return basis;
}

Int determinant(IntMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace feyntope
