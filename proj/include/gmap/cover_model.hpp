#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gmap/kernels.hpp"
#include "gmap/monodromy.hpp"
#include "gmap/series.hpp"

namespace gmap {

/// Local analytic model of y^m = g(x) = prod (x - t_i)^{a_i} at the totally
/// ramified point over t_1 = 0, where y is a local coordinate and
/// x = phi(y).
struct CoverModel {
  MonodromyDatum datum;
  std::vector<Rational> branch_points;
  std::size_t precision = 0;
  TruncatedSeries phi{0};
  /// g'(phi(y)), a unit series.
  TruncatedSeries gprime_at_phi{0};
};

/// (n, nu) label of omega_{n,nu}: the deck generator acts by zeta^n.
struct FormLabel {
  int n = 1;
  int nu = 0;
  friend bool operator==(const FormLabel&, const FormLabel&) = default;
};

/// Local expansions omega = f dy of a basis of H^0(K), ordered n-major
/// then nu.
struct FormBasis {
  int m = 2;
  std::vector<FormLabel> labels;
  std::vector<TruncatedSeries> series;

  std::size_t genus() const noexcept { return series.size(); }
  /// Position of omega_{n,nu}, or -1 if absent.
  std::ptrdiff_t index_of(FormLabel label) const;
};

/// l(i, n) = floor(-n a_i / m), indexed [i][n-1].
std::vector<std::vector<int>> exponent_table(const MonodromyDatum& d);

/// max(150, 12 g).
std::size_t default_precision(int genus);

/// Solves g(x) = y^m for x = phi(y) by the y-adic fixed point
/// x <- y^m / h(x), h(x) = prod_{i>=2} (x - t_i)^{a_i}, and checks the
/// defining identity. Requires a_1 = 1, t_1 = 0 and distinct t_i.
CoverModel branch_solve(const MonodromyDatum& d, std::vector<Rational> t, std::size_t precision);

/// f_{n,nu} = m y^{n-1} phi^nu prod (phi - t_i)^{l(i,n)+a_i} / g'(phi) for
/// every n = 1..m-1, nu < d_n. Throws PrecisionTooLow if some f vanishes
/// to precision.
FormBasis canonical_form_basis(const CoverModel& c,
                               kernels::Execution ex = kernels::Execution::parallel);

} // namespace gmap
