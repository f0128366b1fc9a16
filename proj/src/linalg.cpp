#include "heyde/linalg.hpp"

#include <cassert>

namespace heyde::linalg {

RatMat identity(std::size_t n) {
  RatMat m(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMat mul(const RatMat& a, const RatMat& b) {
  RatMat c(a.size(), RatVec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatVec mul(const RatMat& a, const RatVec& v) {
  RatVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

RatMat add(const RatMat& a, const RatMat& b) {
  RatMat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

RatMat scale(const Rational& s, const RatMat& a) {
  RatMat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Echelon rref(RatMat a) {
  Echelon e;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    e.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  e.rank = static_cast<int>(r);
  a.resize(r);  // drop zero rows
  e.rows = std::move(a);
  return e;
}

AffineSolution solve(const RatMat& a, const RatVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  RatMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  Echelon e = rref(std::move(aug));

  AffineSolution sol;
  for (int pc : e.pivot_cols)
    if (pc == static_cast<int>(cols)) return sol;  // pivot in b column: inconsistent
  sol.consistent = true;

  sol.particular.assign(cols, 0);
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    sol.particular[e.pivot_cols[i]] = e.rows[i][cols];

  std::vector<bool> is_pivot(cols, false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(cols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.rows[i][fc];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

Rational det(RatMat a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[c], a[pivot]);
      d = -d;
    }
    d *= a[c][c];
    Rational inv = 1 / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

bool invertible(const RatMat& a) {
  return !a.empty() && a.size() == a[0].size() && det(a) != 0;
}

std::optional<RatMat> inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
  }
  Echelon e = rref(std::move(aug));
  if (e.rank != static_cast<int>(n)) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

}  // namespace heyde::linalg
