#pragma once

// Hot loops of the pipeline, each in two flavours: a plain serial
// reference and an OpenMP version. Both must produce bit-identical
// results; tests/test_kernels.cpp and bench/ compare them.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "gmap/series.hpp"

namespace gmap::kernels {

enum class Execution { serial, parallel };

using IntegerRow = std::vector<mpz_class>;
using IntegerRows = std::vector<IntegerRow>;

/// Fraction-free (Bareiss) forward elimination in place. Pivots are the
/// first nonzero entry in column order; returns the rank.
std::size_t eliminate_rank_serial(IntegerRows& rows);
std::size_t eliminate_rank_parallel(IntegerRows& rows);

struct EchelonForm {
  /// Column of the pivot of row r, for r < rank.
  std::vector<std::size_t> pivot_columns;
  /// Common value of every pivot; the reduced row echelon form is
  /// rows / denominator.
  mpz_class denominator{1};
};

/// Fraction-free Gauss-Jordan reduction in place. On return the first
/// rank rows hold denominator * RREF, the remaining rows are zero.
EchelonForm reduce_echelon_serial(IntegerRows& rows);
EchelonForm reduce_echelon_parallel(IntegerRows& rows);

/// All products forms[i] * forms[j] for i <= j, in (0,0), (0,1), ...,
/// (0,g-1), (1,1), ... order. With `derivatives`, multiplies the
/// derivatives instead (precision drops by one).
std::vector<TruncatedSeries> pair_products_serial(std::span<const TruncatedSeries> forms,
                                                  bool derivatives);
std::vector<TruncatedSeries> pair_products_parallel(std::span<const TruncatedSeries> forms,
                                                    bool derivatives);

inline std::size_t eliminate_rank(IntegerRows& rows, Execution ex) {
  return ex == Execution::serial ? eliminate_rank_serial(rows) : eliminate_rank_parallel(rows);
}
inline EchelonForm reduce_echelon(IntegerRows& rows, Execution ex) {
  return ex == Execution::serial ? reduce_echelon_serial(rows) : reduce_echelon_parallel(rows);
}
inline std::vector<TruncatedSeries> pair_products(std::span<const TruncatedSeries> forms,
                                                  bool derivatives, Execution ex) {
  return ex == Execution::serial ? pair_products_serial(forms, derivatives)
                                 : pair_products_parallel(forms, derivatives);
}

} // namespace gmap::kernels
