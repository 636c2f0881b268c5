#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gmap/kernels.hpp"
#include "gmap/rational.hpp"

namespace gmap {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Stacks equal-length rows; shorter rows are zero-padded to the longest.
  static RationalMatrix from_rows(std::span<const RationalVector> rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  RationalMatrix transposed() const;
  RationalVector apply(std::span<const Rational> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over Q.
///
/// Rows are scaled to primitive integer vectors and the matrix is split
/// into independent blocks (rows sharing no nonzero column), each
/// eliminated fraction-free. The character grading of the Gaussian-map
/// matrices makes them block diagonal up to permutation, so this split
/// is where most of the speed comes from.
std::size_t rank(const RationalMatrix& m, kernels::Execution ex = kernels::Execution::parallel);

/// Basis of {v : m v = 0}, one vector per non-pivot column of the reduced
/// row echelon form: v has a 1 at its free column and -rref(r, free) at
/// pivot column r. Deterministic.
std::vector<RationalVector> nullspace(const RationalMatrix& m,
                                      kernels::Execution ex = kernels::Execution::parallel);

} // namespace gmap
