#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "kmhom/rational.hpp"

namespace kmhom {

using QVec = std::vector<Rational>;

inline bool is_zero(const QVec& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

/// Kernel of an m x n matrix, computed by fraction-free (Bareiss) Gaussian
/// elimination. Rows are first scaled to integers; the elimination then
/// stays in the integers, with every division exact. Returns a basis of
/// { x : A x = 0 } as rational vectors.
inline std::vector<QVec> kernel_basis(const std::vector<QVec>& rows, std::size_t ncols) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    assert(row.size() == ncols);
    BigInt scale = 1;
    for (const auto& q : row) scale = lcm(scale, denominator(q));
    std::vector<BigInt> r(ncols);
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      r[c] = numerator(row[c]) * (scale / denominator(row[c]));
      nonzero = nonzero || r[c] != 0;
    }
    if (nonzero) m.push_back(std::move(r));
  }

  std::vector<std::size_t> pivot_cols;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        BigInt num = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
        BigInt q, rem;
        divide_qr(num, prev, q, rem);
        assert(rem == 0);
        m[r][c] = q;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVec x(ncols, Rational(0));
    x[f] = 1;
    for (std::size_t pr = rank; pr-- > 0;) {
      std::size_t pc = pivot_cols[pr];
      Rational acc(0);
      for (std::size_t c = pc + 1; c < ncols; ++c)
        if (x[c] != 0) acc += Rational(m[pr][c]) * x[c];
      x[pc] = -acc / Rational(m[pr][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::size_t matrix_rank(const std::vector<QVec>& rows, std::size_t ncols) {
  return ncols - kernel_basis(rows, ncols).size();
}

/// Incrementally maintained reduced row echelon form of a row span.
/// Supports exact membership tests and reduction modulo the span.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<QVec>& rows() const { return rows_; }

  /// Reduces v modulo the span; the result has zeros in all pivot columns.
  QVec reduce(QVec v) const {
    assert(v.size() == ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& coeff = v[pivots_[r]];
      if (coeff != 0) {
        Rational t = coeff;  // rows are normalized to pivot 1
        for (std::size_t c = 0; c < ncols_; ++c)
          if (rows_[r][c] != 0) v[c] -= t * rows_[r][c];
      }
    }
    return v;
  }

  bool contains(const QVec& v) const { return is_zero(reduce(v)); }

  /// Inserts v; returns true if the rank grew.
  bool insert(QVec v) {
    v = reduce(std::move(v));
    std::size_t lead = ncols_;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (v[c] != 0) { lead = c; break; }
    if (lead == ncols_) return false;
    Rational inv = v[lead];
    for (auto& q : v) q /= inv;
    // keep the form fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational t = rows_[r][lead];
      if (t != 0)
        for (std::size_t c = 0; c < ncols_; ++c)
          if (v[c] != 0) rows_[r][c] -= t * v[c];
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < lead) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, lead);
    return true;
  }

 private:
  std::size_t ncols_;
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Tracks a growing list of basis vectors B_0, B_1, ... and answers, for each
/// new vector v, either "v = sum t_j B_j" (returning the coefficients) or
/// appends v as the next basis vector. Used to pick graded-component bases
/// and record expansions of dependent candidates in one pass.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t ncols) : ncols_(ncols) {}

  std::size_t size() const { return nbasis_; }

  /// Returns expansion coefficients over the current basis if v is dependent,
  /// std::nullopt if v was appended as basis vector number size()-1.
  std::optional<QVec> solve_or_insert(const QVec& v) {
    assert(v.size() == ncols_);
    QVec r = v;
    QVec combo(nbasis_, Rational(0));
    for (std::size_t e = 0; e < ech_.size(); ++e) {
      const Rational& coeff = r[pivots_[e]];
      if (coeff != 0) {
        Rational t = coeff / ech_[e][pivots_[e]];
        for (std::size_t c = 0; c < ncols_; ++c)
          if (ech_[e][c] != 0) r[c] -= t * ech_[e][c];
        for (std::size_t j = 0; j < nbasis_; ++j)
          if (combos_[e][j] != 0) combo[j] += t * combos_[e][j];
      }
    }
    std::size_t lead = ncols_;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (r[c] != 0) { lead = c; break; }
    if (lead == ncols_) return combo;
    // r = v - sum combo_j B_j, so as a vector over the extended basis:
    QVec rc(nbasis_ + 1, Rational(0));
    for (std::size_t j = 0; j < nbasis_; ++j) rc[j] = -combo[j];
    rc[nbasis_] = 1;
    for (auto& cv : combos_) cv.push_back(Rational(0));
    ech_.push_back(std::move(r));
    combos_.push_back(std::move(rc));
    pivots_.push_back(lead);
    ++nbasis_;
    return std::nullopt;
  }

 private:
  std::size_t ncols_;
  std::size_t nbasis_ = 0;
  std::vector<QVec> ech_;
  std::vector<QVec> combos_;  // ech_[e] = sum_j combos_[e][j] * B_j
  std::vector<std::size_t> pivots_;
};

}  // namespace kmhom
