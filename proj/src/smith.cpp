#include "algrec/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace algrec {

IntMatrix to_matrix(const std::vector<IntVec>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Integer>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matmul: shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

Integer determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t matrix_rank(const IntMatrix& input) {
  if (input.empty()) return 0;
  IntMatrix a = input;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Integer f = a[i][c], g = a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[rank][j] * f;
    }
    ++rank;
  }
  return rank;
}

namespace {

struct SmithWork {
  IntMatrix d, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : d) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < cols; ++c) d[i][c] += q * d[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] += q * u[j][c];
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) d[r][i] += q * d[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] += q * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  SmithWork w{a, identity_matrix(rows), identity_matrix(cols), rows, cols};

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (w.d[i][j] != 0 && (pi == rows || abs_value(w.d[i][j]) < abs_value(w.d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      if (pi != t) w.swap_rows(t, pi);
      if (pj != t) w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.d[i][t] == 0) continue;
        w.add_row(i, t, Integer(-(w.d[i][t] / w.d[t][t])));
        if (w.d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.d[t][j] == 0) continue;
        w.add_col(j, t, Integer(-(w.d[t][j] / w.d[t][t])));
        if (w.d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.d[i][j] % w.d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, Integer(1));
    }
    if (w.d[t][t] < 0) w.negate_row(t);
  }

  SmithDecomposition s{std::move(w.u), std::move(w.v), std::move(w.d), {}};
  for (std::size_t t = 0; t < steps; ++t) s.diagonal.push_back(s.d[t][t]);
  return s;
}

bool verify_smith(const IntMatrix& a, const SmithDecomposition& s) {
  if (matmul(matmul(s.u, a), s.v) != s.d) return false;
  if (abs_value(determinant(s.u)) != 1 || abs_value(determinant(s.v)) != 1) return false;
  for (std::size_t i = 0; i < s.d.size(); ++i)
    for (std::size_t j = 0; j < s.d[i].size(); ++j)
      if (i != j && s.d[i][j] != 0) return false;
  for (std::size_t t = 0; t < s.diagonal.size(); ++t) {
    if (s.diagonal[t] < 0) return false;
    if (t + 1 < s.diagonal.size()) {
      const Integer& x = s.diagonal[t];
      const Integer& y = s.diagonal[t + 1];
      if (x == 0 ? y != 0 : y % x != 0) return false;
    }
  }
  return true;
}

LatticeBasisReport subgroup_index(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("subgroup_index: empty input");
  const std::size_t d = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != d || d == 0) throw std::invalid_argument("subgroup_index: vectors must share a positive dimension");
  LatticeBasisReport r;
  r.vectors = vectors;
  r.dimension = d;
  const auto s = smith_normal_form(to_matrix(vectors));
  r.smith_diagonal = s.diagonal;
  Integer product = 1;
  for (const auto& x : s.diagonal)
    if (x != 0) {
      ++r.rank;
      product *= x;
    }
  if (r.rank == d) r.index = product;
  return r;
}

} // namespace algrec
