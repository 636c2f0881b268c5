#pragma once

#include <random>

#include "gmap/matrix.hpp"
#include "gmap/series.hpp"

namespace gmap::testing {

inline constexpr int property_cases = 120;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240917);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9) {
  return Rational(mpz_class(uniform(-bound, bound)), mpz_class(uniform(1, bound)));
}

inline Rational random_nonzero_rational(long bound = 9) {
  Rational q;
  while (q.is_zero()) q = random_rational(bound);
  return q;
}

/// Random series whose first `zeros` coefficients vanish; roughly a third
/// of the remaining coefficients are zero too.
inline TruncatedSeries random_series(std::size_t precision, std::size_t zeros = 0) {
  std::vector<Rational> c(precision);
  for (std::size_t k = zeros; k < precision; ++k) {
    if (uniform(0, 2) != 0) c[k] = random_rational();
  }
  if (zeros < precision) c[zeros] = random_nonzero_rational();
  return TruncatedSeries(std::move(c));
}

inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, int zero_weight = 1) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (uniform(0, zero_weight) == 0) m(r, c) = random_rational(5);
    }
  }
  return m;
}

/// Matrix of prescribed rank: product of random rows x k and k x cols factors.
inline RationalMatrix random_matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t k) {
  const RationalMatrix a = random_matrix(rows, k, 0);
  const RationalMatrix b = random_matrix(k, cols, 0);
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t i = 0; i < k; ++i) out(r, c) += a(r, i) * b(i, c);
    }
  }
  return out;
}

} // namespace gmap::testing
