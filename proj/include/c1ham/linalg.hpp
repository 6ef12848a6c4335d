#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "c1ham/rational.hpp"

namespace c1ham {

/// Dense rational matrix. The column count is stored explicitly so that
/// matrices with zero rows (and zero columns) keep their shape.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, RatVec(cols, Rat(0))) {}

  static RatMat from_rows(std::vector<RatVec> rows, std::optional<std::size_t> cols = std::nullopt);
  static RatMat from_cols(std::span<const RatVec> cols, std::size_t rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const RatVec& row(std::size_t r) const { return rows_[r]; }
  const std::vector<RatVec>& row_data() const { return rows_; }

  /// m * v (v of length cols()).
  RatVec apply(std::span<const Rat> v) const;

  bool operator==(const RatMat& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<RatVec> rows_;
};

/// Reduced row echelon form; the result is unique, independent of pivot
/// choices. When `pivot_cols` is given it receives the pivot column
/// indices in increasing order.
RatMat rref(const RatMat& m, std::vector<std::size_t>* pivot_cols = nullptr);

/// Row-space dimension via exact Gaussian elimination.
std::size_t rank(const RatMat& m);

/// Basis of the right null space {x : m x = 0}, one vector per free
/// column, ordered by free column index. Empty when m is injective.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Solves m x = b exactly.
struct SolveResult {
  enum Kind { Inconsistent, Unique, Underdetermined } kind = Inconsistent;
  RatVec solution;  // valid when kind == Unique
};
SolveResult solve(const RatMat& m, std::span<const Rat> b);

/// true iff the vectors are linearly independent; the empty family is
/// independent. Throws DataError on mixed dimensions.
bool is_independent(std::span<const RatVec> vectors);

/// The integer vector proportional to v with entry gcd 1 and first
/// nonzero entry positive. Unique-up-to-sign made canonical. Throws on
/// the zero vector.
IntVec primitive_integer_generator(std::span<const Rat> v);

/// Negates so the first nonzero entry is positive; gcd untouched.
IntVec sign_normalized(IntVec v);

}  // namespace c1ham
