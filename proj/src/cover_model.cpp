#include "gmap/cover_model.hpp"

#include <algorithm>
#include <set>

#include "gmap/error.hpp"

namespace gmap {

namespace {

using Polynomial = std::vector<Rational>;  // ascending coefficients

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  Polynomial out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return {Rational(0)};
  Polynomial out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * Rational(static_cast<long>(k));
  return out;
}

// prod_{i >= first} (x - t_i)^{a_i}
Polynomial branch_polynomial(const MonodromyDatum& d, const std::vector<Rational>& t, std::size_t first) {
  Polynomial out{Rational(1)};
  for (std::size_t i = first; i < d.a.size(); ++i) {
    const Polynomial linear{-t[i], Rational(1)};
    for (int e = 0; e < d.a[i]; ++e) out = multiply(out, linear);
  }
  return out;
}

int floor_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return static_cast<int>(q);
}

} // namespace

std::ptrdiff_t FormBasis::index_of(FormLabel label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : it - labels.begin();
}

std::vector<std::vector<int>> exponent_table(const MonodromyDatum& d) {
  std::vector<std::vector<int>> l(d.a.size(), std::vector<int>(static_cast<std::size_t>(d.m - 1)));
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    for (int n = 1; n < d.m; ++n) l[i][static_cast<std::size_t>(n - 1)] = floor_div(-1LL * n * d.a[i], d.m);
  }
  return l;
}

std::size_t default_precision(int genus) {
  return std::max<std::size_t>(150, 12 * static_cast<std::size_t>(std::max(genus, 0)));
}

CoverModel branch_solve(const MonodromyDatum& d, std::vector<Rational> t, std::size_t precision) {
  if (const auto v = validate(d); !v.empty()) {
    throw Error(ErrorCode::InvalidDatum, "cover-model", v.front().message);
  }
  if (t.size() != d.a.size()) {
    throw Error(ErrorCode::InvalidArgument, "cover-model",
                "expected " + std::to_string(d.a.size()) + " branch points, got " +
                    std::to_string(t.size()));
  }
  if (d.a.front() != 1 || !t.front().is_zero()) {
    throw Error(ErrorCode::NotNormalized, "cover-model",
                "expansion needs a_1 = 1 and t_1 = 0 (got a_1 = " + std::to_string(d.a.front()) +
                    ", t_1 = " + t.front().to_string() + ")");
  }
  if (std::set<Rational>(t.begin(), t.end()).size() != t.size()) {
    throw Error(ErrorCode::RepeatedBranchPoints, "cover-model", "branch points must be distinct");
  }
  if (precision < 2) {
    throw Error(ErrorCode::PrecisionTooLow, "cover-model", "precision must be at least 2");
  }

  const Polynomial h = branch_polynomial(d, t, 1);
  const Polynomial g = multiply(h, Polynomial{Rational(0), Rational(1)});
  const Polynomial gprime = derivative(g);
  const auto m = static_cast<std::size_t>(d.m);

  // Each pass fixes m more coefficients, so pass k only needs precision
  // m (k + 1); ceil(prec / m) + 1 passes reach the target.
  TruncatedSeries phi(1);
  const std::size_t passes = (precision + m - 1) / m + 1;
  for (std::size_t k = 1; k <= passes; ++k) {
    const std::size_t p = std::min(precision, m * (k + 1));
    const TruncatedSeries x = phi.truncated(p);
    phi = series_mul(TruncatedSeries::monomial(1, m, p), series_inverse(compose_polynomial(h, x)));
  }
  phi = phi.truncated(precision);

  if (compose_polynomial(g, phi) != TruncatedSeries::monomial(1, m, precision)) {
    throw Error(ErrorCode::PrecisionTooLow, "cover-model",
                "fixed point did not satisfy g(phi(y)) = y^m to precision");
  }
  CoverModel c;
  c.datum = d;
  c.branch_points = std::move(t);
  c.precision = precision;
  c.gprime_at_phi = compose_polynomial(gprime, phi);
  c.phi = std::move(phi);
  return c;
}

FormBasis canonical_form_basis(const CoverModel& c, kernels::Execution ex) {
  const MonodromyDatum& d = c.datum;
  const auto dims = eigenspace_dimensions(d);
  const auto l = exponent_table(d);
  const std::size_t prec = c.precision;
  const TruncatedSeries inv_gprime = series_inverse(c.gprime_at_phi);

  int max_nu = 0;
  for (int dn : dims) max_nu = std::max(max_nu, dn);
  std::vector<TruncatedSeries> phi_pow{TruncatedSeries::constant(1, prec)};
  for (int nu = 1; nu < max_nu; ++nu) phi_pow.push_back(series_mul(phi_pow.back(), c.phi));

  FormBasis basis;
  basis.m = d.m;
  std::vector<TruncatedSeries> leading;  // f_{n,0} per task
  for (int n = 1; n < d.m; ++n) {
    const int dn = dims[static_cast<std::size_t>(n - 1)];
    if (dn <= 0) continue;
    TruncatedSeries f = TruncatedSeries::monomial(d.m, static_cast<std::size_t>(n - 1), prec);
    for (std::size_t i = 0; i < d.a.size(); ++i) {
      const int e = l[i][static_cast<std::size_t>(n - 1)] + d.a[i];
      if (e == 0) continue;
      TruncatedSeries shifted = c.phi;
      shifted -= TruncatedSeries::constant(c.branch_points[i], prec);
      f = series_mul(f, series_pow(shifted, static_cast<unsigned>(e)));
    }
    f = series_mul(f, inv_gprime);
    for (int nu = 0; nu < dn; ++nu) {
      basis.labels.push_back({n, nu});
      leading.push_back(f);
    }
  }

  basis.series.assign(basis.labels.size(), TruncatedSeries(0));
  const auto count = static_cast<std::ptrdiff_t>(basis.labels.size());
  auto build = [&](std::ptrdiff_t k) {
    basis.series[k] = series_mul(leading[k], phi_pow[static_cast<std::size_t>(basis.labels[k].nu)]);
  };
  if (ex == kernels::Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) build(k);
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k) build(k);
  }

  for (std::size_t k = 0; k < basis.series.size(); ++k) {
    if (basis.series[k].is_zero()) {
      throw Error(ErrorCode::PrecisionTooLow, "cover-model",
                  "form omega_{" + std::to_string(basis.labels[k].n) + "," +
                      std::to_string(basis.labels[k].nu) + "} vanishes to precision " +
                      std::to_string(prec));
    }
  }
  return basis;
}

} // namespace gmap
