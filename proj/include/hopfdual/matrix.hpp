#pragma once

// Exact sparse matrices over Q and rank/kernel computation.
//
// rank_kernel clears denominators row by row and runs fraction-free
// Bareiss elimination on a dense integer copy when the matrix is small
// enough; larger matrices go through sparse elimination with Markowitz
// pivoting. Both paths are exact.

#include <hopfdual/rational.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hopfdual {

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative size");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }
  size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void set(int r, int c, const Rational& v) {
    check(r, c);
    if (hopfdual::is_zero(v))
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  void add(int r, int c, const Rational& v) {
    check(r, c);
    if (hopfdual::is_zero(v)) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
      entries_.emplace(std::make_pair(r, c), v);
    } else {
      it->second += v;
      if (hopfdual::is_zero(it->second)) entries_.erase(it);
    }
  }

  Rational get(int r, int c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
    // row-major access into b
    std::vector<std::vector<std::pair<int, Rational>>> brows(b.rows_);
    for (const auto& [rc, v] : b.entries_) brows[rc.first].push_back({rc.second, v});
    SparseMatrix r(a.rows_, b.cols_);
    for (const auto& [rc, v] : a.entries_) {
      for (const auto& [c2, w] : brows[rc.second]) r.add(rc.first, c2, v * w);
    }
    return r;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index out of range");
  }

  int rows_ = 0, cols_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

struct RankKernel {
  int rank;
  int kernel_dimension;
};

namespace detail {

// Fraction-free Bareiss elimination on a dense integer matrix; returns rank.
inline int bareiss_rank(std::vector<std::vector<Integer>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    // smallest-magnitude nonzero pivot keeps intermediate growth down
    int pr = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      if (pr < 0 ||
          mpz_cmpabs(m[r][col].get_mpz_t(), m[pr][col].get_mpz_t()) < 0)
        pr = r;
    }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    const Integer& p = m[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        Integer t = p * m[r][c] - m[r][col] * m[rank][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[r][c] = std::move(t);
      }
      m[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

// Sparse elimination over Q with Markowitz pivot selection; returns rank.
inline int sparse_rank(int rows, int cols,
                       const std::map<std::pair<int, int>, Rational>& entries) {
  std::vector<std::map<int, Rational>> row(rows);
  for (const auto& [rc, v] : entries) row[rc.first][rc.second] = v;
  std::vector<std::vector<int>> col_rows(cols);  // rebuilt lazily below
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  int rank = 0;
  for (;;) {
    // column occupancy for Markowitz cost
    std::vector<int> col_count(cols, 0);
    for (int r = 0; r < rows; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : row[r])
        if (!col_done[c]) ++col_count[c];
    }
    long best = -1;
    int pr = -1, pc = -1;
    for (int r = 0; r < rows; ++r) {
      if (row_done[r] || row[r].empty()) continue;
      long rn = static_cast<long>(row[r].size()) - 1;
      for (const auto& [c, v] : row[r]) {
        if (col_done[c]) continue;
        long cost = rn * (col_count[c] - 1);
        if (best < 0 || cost < best) {
          best = cost;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    const Rational p = row[pr][pc];
    for (int r = 0; r < rows; ++r) {
      if (r == pr || row_done[r]) continue;
      auto it = row[r].find(pc);
      if (it == row[r].end()) continue;
      Rational f = it->second / p;
      row[r].erase(it);
      for (const auto& [c, v] : row[pr]) {
        if (c == pc) continue;
        auto jt = row[r].find(c);
        if (jt == row[r].end()) {
          row[r].emplace(c, -f * v);
        } else {
          jt->second -= f * v;
          if (is_zero(jt->second)) row[r].erase(jt);
        }
      }
    }
    row_done[pr] = true;
    col_done[pc] = true;
    row[pr].clear();
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline constexpr int kDenseRankThreshold = 512;

inline RankKernel rank_kernel(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero())
    return {0, m.cols()};
  int rank;
  if (m.cols() <= kDenseRankThreshold && m.rows() <= 4 * kDenseRankThreshold) {
    // clear denominators per row; scaling rows does not change the rank
    std::vector<Integer> den(m.rows(), 1);
    for (const auto& [rc, v] : m.entries())
      den[rc.first] = lcm(den[rc.first], v.get_den());
    std::vector<std::vector<Integer>> z(
        m.rows(), std::vector<Integer>(m.cols(), Integer(0)));
    for (const auto& [rc, v] : m.entries()) {
      Rational s = v * Rational(den[rc.first]);
      z[rc.first][rc.second] = s.get_num();
    }
    rank = detail::bareiss_rank(std::move(z));
  } else {
    rank = detail::sparse_rank(m.rows(), m.cols(), m.entries());
  }
  return {rank, m.cols() - rank};
}

}  // namespace hopfdual
