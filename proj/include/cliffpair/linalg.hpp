#pragma once

// Dense exact linear algebra over the rationals: row reduction, linear
// solves, nullspace bases.  Sizes stay at desk scale (hundreds of rows), so
// fraction-free tricks are not needed; plain Gaussian elimination with exact
// arithmetic is both simple and fast enough.

#include <optional>
#include <vector>

#include "cliffpair/rational.hpp"

namespace cliffpair {

struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline QMatrix mat_mul(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw domain_error("matrix size mismatch");
  QMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

inline std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v) {
  if (m.cols != v.size()) throw domain_error("matrix size mismatch");
  std::vector<Rational> out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

// In-place reduced row echelon form; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    Rational inv = m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) /= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// One exact solution of A x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b) {
  if (A.rows != b.size()) throw domain_error("matrix size mismatch");
  QMatrix aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
  std::vector<Rational> x(A.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols);
  return x;
}

// Basis of { x : A x = 0 }, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(const QMatrix& A) {
  QMatrix m = A;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(A.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cliffpair
