#include "algrec/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace algrec {

std::optional<std::vector<Rational>> nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                          const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  if (b.size() != m) throw std::invalid_argument("nonnegative_solution: shape mismatch");

  // Columns: n originals, m artificials, rhs. Row m holds reduced costs of the
  // phase-one objective (sum of artificials).
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) t[m][width - 1] -= t[i][width - 1];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break; // unbounded direction; cannot happen in phase one

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (t[m][width - 1] != 0) return std::nullopt;
  std::vector<Rational> u(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) u[basis[i]] = t[i][width - 1];
  return u;
}

namespace {

std::size_t dimension_of(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("empty vector list");
  const std::size_t d = vectors[0].size();
  if (d == 0) throw std::invalid_argument("vectors must have positive dimension");
  for (const auto& v : vectors)
    if (v.size() != d) throw std::invalid_argument("vectors must share one dimension");
  return d;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Integer dot(const std::vector<Integer>& n, const IntVec& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += n[i] * v[i];
  return s;
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_value(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::size_t rank_of(const std::vector<IntVec>& vs, const std::vector<std::size_t>& idx) {
  std::vector<IntVec> rows;
  for (auto i : idx) rows.push_back(vs[i]);
  return rows.empty() ? 0 : matrix_rank(to_matrix(rows));
}

/// Strictly positive t with sum t_i v_i = 0 over the chosen vectors: solve
/// A u = -sum v with u >= 0 and take t = 1 + u.
std::optional<std::vector<Rational>> positive_dependency(const std::vector<IntVec>& vs,
                                                         const std::vector<std::size_t>& idx, std::size_t d) {
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(idx.size(), 0));
  std::vector<Rational> rhs(d, 0);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t r = 0; r < d; ++r) {
      a[r][k] = vs[idx[k]][r];
      rhs[r] -= vs[idx[k]][r];
    }
  auto u = nonnegative_solution(a, rhs);
  if (!u) return std::nullopt;
  for (auto& x : *u) x += 1;
  return u;
}

bool positively_spans(const std::vector<IntVec>& vs, const std::vector<std::size_t>& idx, std::size_t d) {
  return rank_of(vs, idx) == d && positive_dependency(vs, idx, d).has_value();
}

/// A primitive integer vector orthogonal to every input, sign-normalized so
/// its first nonzero entry is positive. Requires rank < d.
std::vector<Integer> orthogonal_vector(const std::vector<IntVec>& vs, std::size_t d) {
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < d && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational piv = m[row][c];
    for (auto& x : m[row]) x /= piv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < d; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> x(d, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r][free_col];
  auto n = primitive_integer_vector(x);
  for (const auto& v : n)
    if (v != 0) {
      if (v < 0)
        for (auto& w : n) w = -w;
      break;
    }
  return n;
}

/// Cofactor vector orthogonal to the d-1 given rows.
std::vector<Integer> cross_product(const std::vector<const IntVec*>& rows, std::size_t d) {
  std::vector<Integer> n(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix minor;
    for (const auto* r : rows) {
      std::vector<Integer> line;
      for (std::size_t c = 0; c < d; ++c)
        if (c != j) line.emplace_back((*r)[c]);
      minor.push_back(std::move(line));
    }
    Integer det = determinant(minor);
    n[j] = (j % 2 == 0) ? det : Integer(-det);
  }
  return n;
}

/// Sum of the primitive facet normals of the cone spanned by the vectors.
/// Requires full rank and no positive spanning.
std::vector<Integer> facet_normal_sum(const std::vector<IntVec>& distinct, std::size_t d) {
  std::set<std::vector<Integer>> normals;
  const std::size_t k = d - 1;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  auto valid = [&](const std::vector<Integer>& n) {
    return std::all_of(distinct.begin(), distinct.end(), [&](const IntVec& v) { return dot(n, v) >= 0; });
  };
  while (true) {
    if (k <= distinct.size()) {
      std::vector<const IntVec*> rows;
      for (auto i : pick) rows.push_back(&distinct[i]);
      auto n = cross_product(rows, d);
      if (std::any_of(n.begin(), n.end(), [](const Integer& x) { return x != 0; })) {
        n = primitive(std::move(n));
        if (valid(n)) normals.insert(n);
        for (auto& x : n) x = -x;
        if (valid(n)) normals.insert(n);
      }
    }
    // next k-combination of distinct.size() items
    if (k == 0 || k > distinct.size()) break;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == distinct.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (normals.empty()) throw std::logic_error("no supporting hyperplane found for a non-spanning cone");
  std::vector<Integer> sum(d, 0);
  for (const auto& n : normals)
    for (std::size_t i = 0; i < d; ++i) sum[i] += n[i];
  return primitive(std::move(sum));
}

} // namespace

ConeWitness zero_in_convex_hull(const std::vector<IntVec>& vectors) {
  const std::size_t d = dimension_of(vectors);
  if (d > 6 || vectors.size() > 64)
    throw std::invalid_argument("zero_in_convex_hull supports dimension <= 6 and at most 64 vectors");

  std::vector<IntVec> distinct;
  for (const auto& v : vectors)
    if (!is_zero(v) && std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);

  std::vector<std::size_t> all(distinct.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  ConeWitness w;
  if (rank_of(distinct, all) < d) {
    w = HalfSpace{orthogonal_vector(vectors, d)};
  } else if (!positive_dependency(distinct, all, d)) {
    w = HalfSpace{facet_normal_sum(distinct, d)};
  } else {
    // Drop points while the rest still positively spans R^d.
    std::vector<std::size_t> keep = all;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      std::vector<std::size_t> trial;
      for (auto j : keep)
        if (j != i) trial.push_back(j);
      if (positively_spans(distinct, trial, d)) keep = std::move(trial);
    }
    // Independent points first.
    std::vector<std::size_t> ordered, rest;
    for (auto i : keep) {
      ordered.push_back(i);
      if (rank_of(distinct, ordered) < ordered.size()) {
        ordered.pop_back();
        rest.push_back(i);
      }
    }
    ordered.insert(ordered.end(), rest.begin(), rest.end());
    auto t = positive_dependency(distinct, ordered, d);
    ZeroInHull z;
    for (auto i : ordered) z.points.push_back(distinct[i]);
    z.coefficients = primitive_integer_vector(*t);
    w = std::move(z);
  }
  if (!verify_witness(w, vectors)) throw std::logic_error("cone witness failed verification");
  return w;
}

bool verify_witness(const ConeWitness& w, const std::vector<IntVec>& vectors) {
  const std::size_t d = dimension_of(vectors);
  if (const auto* h = std::get_if<HalfSpace>(&w)) {
    if (h->normal.size() != d) return false;
    if (std::all_of(h->normal.begin(), h->normal.end(), [](const Integer& x) { return x == 0; })) return false;
    return std::all_of(vectors.begin(), vectors.end(), [&](const IntVec& v) { return dot(h->normal, v) >= 0; });
  }
  const auto& z = std::get<ZeroInHull>(w);
  if (z.points.size() != z.coefficients.size() || z.points.size() < d + 1) return false;
  for (const auto& p : z.points)
    if (std::find(vectors.begin(), vectors.end(), p) == vectors.end()) return false;
  for (const auto& t : z.coefficients)
    if (t <= 0) return false;
  for (std::size_t r = 0; r < d; ++r) {
    Integer s = 0;
    for (std::size_t i = 0; i < z.points.size(); ++i) s += z.coefficients[i] * z.points[i][r];
    if (s != 0) return false;
  }
  std::vector<IntVec> head(z.points.begin(), z.points.begin() + static_cast<std::ptrdiff_t>(d));
  return matrix_rank(to_matrix(head)) == d;
}

} // namespace algrec
