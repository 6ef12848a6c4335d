#include "c1ham/linalg.hpp"

#include <algorithm>

namespace c1ham {

RatMat RatMat::from_rows(std::vector<RatVec> rows, std::optional<std::size_t> cols) {
  RatMat m;
  if (!rows.empty()) {
    m.cols_ = rows.front().size();
  } else if (cols) {
    m.cols_ = *cols;
  }
  if (cols && !rows.empty() && *cols != rows.front().size())
    throw DataError("matrix column count does not match row length");
  for (const RatVec& r : rows)
    if (r.size() != m.cols_) throw DataError("ragged matrix: rows of unequal length");
  m.rows_ = std::move(rows);
  return m;
}

RatMat RatMat::from_cols(std::span<const RatVec> cols, std::size_t rows) {
  RatMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DataError("ragged matrix: columns of unequal length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatVec RatMat::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw DataError("dimension mismatch in matrix-vector product");
  RatVec out(rows(), Rat(0));
  for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], v);
  return out;
}

RatMat rref(const RatMat& m, std::vector<std::size_t>* pivot_cols) {
  RatMat a = m;
  if (pivot_cols) pivot_cols->clear();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // Prefer a denominator-free pivot at the lowest row index; fall back
    // to the lowest nonzero row. The RREF itself does not depend on this
    // choice, only intermediate sizes do.
    std::size_t chosen = a.rows();
    std::size_t first_nonzero = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (a.at(r, col) == 0) continue;
      if (first_nonzero == a.rows()) first_nonzero = r;
      if (denominator(a.at(r, col)) == 1) {
        chosen = r;
        break;
      }
    }
    if (chosen == a.rows()) chosen = first_nonzero;
    if (chosen == a.rows()) continue;  // zero column

    if (chosen != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(chosen, c), a.at(pivot_row, c));
    }
    const Rat inv = Rat(1) / a.at(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col) == 0) continue;
      const Rat factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(pivot_row, c);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return a;
}

std::size_t rank(const RatMat& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  std::vector<std::size_t> pivots;
  const RatMat r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const RatMat& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw DataError("dimension mismatch in linear solve");
  RatMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RatMat r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return {SolveResult::Inconsistent, {}};
  if (pivots.size() < m.cols()) return {SolveResult::Underdetermined, {}};
  RatVec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, m.cols());
  return {SolveResult::Unique, std::move(x)};
}

bool is_independent(std::span<const RatVec> vectors) {
  if (vectors.empty()) return true;
  const std::size_t dim = vectors.front().size();
  for (const RatVec& v : vectors)
    if (v.size() != dim) throw DataError("dimension mismatch in independence test");
  std::vector<RatVec> rows(vectors.begin(), vectors.end());
  return rank(RatMat::from_rows(std::move(rows), dim)) == vectors.size();
}

IntVec primitive_integer_generator(std::span<const Rat> v) {
  if (is_zero(v)) throw DataError("primitive generator of the zero vector is undefined");
  Int denom_lcm = 1;
  for (const Rat& x : v) denom_lcm = lcm(denom_lcm, denominator(x));
  IntVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    scaled[i] = numerator(v[i]) * (denom_lcm / denominator(v[i]));
  Int g = 0;
  for (const Int& x : scaled) g = gcd(g, x);
  for (Int& x : scaled) x /= g;
  return sign_normalized(std::move(scaled));
}

IntVec sign_normalized(IntVec v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace c1ham
