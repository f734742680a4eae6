// Small dense exact linear algebra over the rationals: enough for root-system
// geometry in rank <= 3 (ambient dimension <= 4) and for the residual
// arrangement combinatorics.
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hypergeo/rational.hpp"

namespace hypergeo {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major

inline QVec qvec_zero(std::size_t n) { return QVec(n, Rational(0)); }

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline QVec scale(const QVec& a, const Rational& c) {
  QVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
  std::size_t n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
  QMat r(n, QVec(q, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < q; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat r(a[0].size(), QVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline QMat identity(std::size_t n) {
  QMat r(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

// Gram matrix of a list of vectors.
inline QMat gram(const std::vector<QVec>& v) {
  QMat g(v.size(), QVec(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) g[i][j] = dot(v[i], v[j]);
  return g;
}

inline Rational det(QMat m) {
  std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rational inv = Rational(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

inline int rank_of(QMat m) { return static_cast<int>(rref(m).size()); }

// Solve A x = b (A square, nonsingular expected). Returns nullopt if singular
// or inconsistent.
inline std::optional<QVec> solve(QMat a, QVec b) {
  std::size_t n = a.size();
  std::size_t cols = n ? a[0].size() : 0;
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  QVec x(cols, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool allzero = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) allzero = false;
    if (allzero && a[i][cols] != 0) return std::nullopt;  // inconsistent
  }
  if (pivots.size() != cols && !(pivots.size() <= cols)) return std::nullopt;
  if (static_cast<std::size_t>(std::count_if(pivots.begin(), pivots.end(), [&](int p) {
        return p < static_cast<int>(cols);
      })) < cols)
    return std::nullopt;  // underdetermined
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

// Solve the (possibly rectangular, consistent) system A x = b; returns one
// solution, or nullopt if inconsistent. Free variables are set to zero.
inline std::optional<QVec> solve_any(QMat a, QVec b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool allzero = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) allzero = false;
    if (allzero && a[i][cols] != 0) return std::nullopt;
  }
  QVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] < static_cast<int>(cols)) x[pivots[i]] = a[i][cols];
  return x;
}

// Basis (as rows) of the kernel of A.
inline QMat nullspace(QMat a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(v);
  }
  return basis;
}

inline QMat inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat m = a;
  for (std::size_t i = 0; i < n; ++i) {
    QVec id(n, Rational(0));
    id[i] = 1;
    m[i].insert(m[i].end(), id.begin(), id.end());
  }
  auto pivots = rref(m);
  if (pivots.size() != n) throw std::runtime_error("inverse: singular matrix");
  QMat r(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = m[i][n + j];
  return r;
}

// Exact feasibility test: is p a convex combination of the given points?
// Phase-1 simplex with Bland's rule on the system
//   sum_i t_i q_i = p, sum_i t_i = 1, t_i >= 0.
inline bool in_convex_hull(const std::vector<QVec>& points, const QVec& p) {
  if (points.empty()) return false;
  std::size_t d = p.size();
  std::size_t m = d + 1;        // equality constraints
  std::size_t n = points.size();
  // Tableau for phase 1: minimize sum of artificials.
  // Columns: t_1..t_n, a_1..a_m | rhs.
  std::vector<QVec> T(m, QVec(n + m + 1, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = points[j][i];
    T[i][n + m] = p[i];
  }
  for (std::size_t j = 0; j < n; ++j) T[d][j] = 1;
  T[d][n + m] = 1;
  // Make rhs nonnegative, add artificial basis.
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (T[i][n + m] < 0)
      for (auto& x : T[i]) x = -x;
    T[i][n + i] = 1;
    basis[i] = n + i;
  }
  // Objective row: z = sum of artificial rows (to be driven to 0).
  QVec z(n + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n + m; ++j) z[j] += T[i][j];
  for (std::size_t i = 0; i < m; ++i) z[n + i] = 0;

  while (true) {
    // Bland: smallest index with positive reduced cost among t-columns and
    // artificial columns not in basis.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;  // optimal
    // Ratio test.
    std::size_t leave = m;
    Rational best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded; cannot happen here
    // Pivot.
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    {
      Rational f = z[enter];
      if (f != 0)
        for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return z[n + m] == 0;  // feasible iff artificials driven to zero
}

inline std::string key_of(const QVec& v) {
  std::ostringstream os;
  for (const auto& x : v) os << x.str() << ",";
  return os.str();
}

inline std::string key_of(const QMat& m) {
  std::ostringstream os;
  for (const auto& r : m) os << key_of(r) << ";";
  return os.str();
}

}  // namespace hypergeo
