#pragma once

// Small dense exact linear algebra over Q: RREF, solving, span membership.
// Used by the finite-basis structure checks, where dimensions stay modest
// (at most a few hundred), so plain rational Gaussian elimination is fine.

#include <hopfdual/rational.hpp>

#include <optional>
#include <vector>

namespace hopfdual {

using Vec = std::vector<Rational>;
using DenseMatrix = std::vector<Vec>;

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

inline Vec unit_vec(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  return y;
}

// Reduced row echelon form in place; returns pivot column per kept row.
inline std::vector<int> rref(DenseMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int p = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (!is_zero(m[r][col])) { p = r; break; }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      Rational f = -m[r][col];
      axpy(m[r], f, m[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size());
  return pivots;
}

inline int dense_rank(DenseMatrix m) { return static_cast<int>(rref(m).size()); }

// Subspace of Q^n spanned by some vectors, kept in RREF for canonical
// coset representatives.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}

  Subspace(int ambient, DenseMatrix spanning) : ambient_(ambient) {
    rows_ = std::move(spanning);
    pivots_ = rref(rows_);
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  // Canonical representative of v + subspace.
  Vec reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (is_zero(v[p])) continue;
      Rational f = -v[p];
      axpy(v, f, rows_[r]);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  bool same_class(const Vec& a, const Vec& b) const {
    Vec d(a.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
    return contains(d);
  }

 private:
  int ambient_;
  DenseMatrix rows_;
  std::vector<int> pivots_;
};

// One solution of A x = b (columns of A indexed by unknowns), if any.
inline std::optional<Vec> solve_linear(const DenseMatrix& a, const Vec& b) {
  if (a.empty()) return is_zero_vec(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  DenseMatrix aug(rows, Vec(cols + 1, Rational(0)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug[r][c] = a[r][c];
    aug[r][cols] = b[r];
  }
  std::vector<int> pivots = rref(aug);
  Vec x(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // inconsistent row
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

// Dimension of the solution space of A x = 0.
inline int nullity(const DenseMatrix& a) {
  if (a.empty()) return 0;
  return static_cast<int>(a[0].size()) - dense_rank(a);
}

}  // namespace hopfdual
