#include "gmap/kernels.hpp"

#include <utility>

namespace gmap::kernels {

namespace {

std::size_t column_count(const IntegerRows& rows) { return rows.empty() ? 0 : rows.front().size(); }

std::ptrdiff_t find_pivot_row(const IntegerRows& rows, std::size_t from, std::size_t column) {
  for (std::size_t i = from; i < rows.size(); ++i) {
    if (sgn(rows[i][column]) != 0) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

// row <- (pivot * row - row[column] * pivot_row) / previous, for entries
// from `first` on. Division is exact (entries are minors of the input).
void bareiss_update(IntegerRow& row, const IntegerRow& pivot_row, std::size_t column,
                    std::size_t first, const mpz_class& pivot, const mpz_class& previous,
                    mpz_class& tmp) {
  const mpz_class factor = row[column];
  const bool eliminate = sgn(factor) != 0;
  for (std::size_t j = first; j < row.size(); ++j) {
    const bool has_own = sgn(row[j]) != 0;
    const bool has_pivot = eliminate && sgn(pivot_row[j]) != 0;
    if (!has_own && !has_pivot) continue;
    mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
    if (has_pivot) mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), pivot_row[j].get_mpz_t());
    mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
  }
}

template <bool Parallel>
std::size_t eliminate_rank_impl(IntegerRows& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = column_count(rows);
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    const std::ptrdiff_t found = find_pivot_row(rows, rank, c);
    if (found < 0) continue;
    std::swap(rows[rank], rows[static_cast<std::size_t>(found)]);
    const IntegerRow& pivot_row = rows[rank];
    const mpz_class pivot = pivot_row[c];
    const auto lo = static_cast<std::ptrdiff_t>(rank + 1);
    const auto hi = static_cast<std::ptrdiff_t>(n);
    if constexpr (Parallel) {
#pragma omp parallel
      {
        mpz_class tmp;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
          bareiss_update(rows[i], pivot_row, c, c, pivot, previous, tmp);
        }
      }
    } else {
      mpz_class tmp;
      for (std::ptrdiff_t i = lo; i < hi; ++i) {
        bareiss_update(rows[i], pivot_row, c, c, pivot, previous, tmp);
      }
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

template <bool Parallel>
EchelonForm reduce_echelon_impl(IntegerRows& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = column_count(rows);
  EchelonForm form;
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    const std::ptrdiff_t found = find_pivot_row(rows, rank, c);
    if (found < 0) continue;
    std::swap(rows[rank], rows[static_cast<std::size_t>(found)]);
    const IntegerRow& pivot_row = rows[rank];
    const mpz_class pivot = pivot_row[c];
    const auto hi = static_cast<std::ptrdiff_t>(n);
    const std::size_t r = rank;
    if constexpr (Parallel) {
#pragma omp parallel
      {
        mpz_class tmp;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < hi; ++i) {
          if (static_cast<std::size_t>(i) != r) bareiss_update(rows[i], pivot_row, c, 0, pivot, previous, tmp);
        }
      }
    } else {
      mpz_class tmp;
      for (std::ptrdiff_t i = 0; i < hi; ++i) {
        if (static_cast<std::size_t>(i) != r) bareiss_update(rows[i], pivot_row, c, 0, pivot, previous, tmp);
      }
    }
    previous = pivot;
    form.pivot_columns.push_back(c);
    ++rank;
  }
  form.denominator = previous;
  return form;
}

std::vector<TruncatedSeries> prepare(std::span<const TruncatedSeries> forms, bool derivatives) {
  std::vector<TruncatedSeries> src;
  src.reserve(forms.size());
  for (const auto& f : forms) src.push_back(derivatives ? series_derivative(f) : f);
  return src;
}

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t g) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(g * (g + 1) / 2);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

} // namespace

std::size_t eliminate_rank_serial(IntegerRows& rows) { return eliminate_rank_impl<false>(rows); }
std::size_t eliminate_rank_parallel(IntegerRows& rows) { return eliminate_rank_impl<true>(rows); }

EchelonForm reduce_echelon_serial(IntegerRows& rows) { return reduce_echelon_impl<false>(rows); }
EchelonForm reduce_echelon_parallel(IntegerRows& rows) { return reduce_echelon_impl<true>(rows); }

std::vector<TruncatedSeries> pair_products_serial(std::span<const TruncatedSeries> forms,
                                                  bool derivatives) {
  const auto src = prepare(forms, derivatives);
  std::vector<TruncatedSeries> out;
  for (const auto& [i, j] : upper_pairs(src.size())) out.push_back(series_mul(src[i], src[j]));
  return out;
}

std::vector<TruncatedSeries> pair_products_parallel(std::span<const TruncatedSeries> forms,
                                                    bool derivatives) {
  const auto src = prepare(forms, derivatives);
  const auto pairs = upper_pairs(src.size());
  std::vector<TruncatedSeries> out(pairs.size(), TruncatedSeries(0));
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    out[p] = series_mul(src[pairs[p].first], src[pairs[p].second]);
  }
  return out;
}

} // namespace gmap::kernels
