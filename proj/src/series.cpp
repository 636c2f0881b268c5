#include "gmap/series.hpp"

#include <algorithm>

#include "gmap/error.hpp"

namespace gmap {

namespace {

// Nonzero coefficients of a series rewritten over one common denominator:
// coefficient[support[k]] = numerators[k] / denominator.
struct IntegerView {
  std::vector<std::size_t> support;
  std::vector<mpz_class> numerators;
  mpz_class denominator{1};
};

IntegerView integer_view(std::span<const Rational> coeffs, std::size_t limit) {
  IntegerView view;
  limit = std::min(limit, coeffs.size());
  for (std::size_t k = 0; k < limit; ++k) {
    if (coeffs[k].is_zero()) continue;
    view.support.push_back(k);
    const mpq_class& q = coeffs[k].raw();
    if (q.get_den() != 1) mpz_lcm(view.denominator.get_mpz_t(), view.denominator.get_mpz_t(),
                                  q.get_den_mpz_t());
  }
  view.numerators.reserve(view.support.size());
  mpz_class scale;
  for (std::size_t k : view.support) {
    const mpq_class& q = coeffs[k].raw();
    mpz_divexact(scale.get_mpz_t(), view.denominator.get_mpz_t(), q.get_den_mpz_t());
    view.numerators.emplace_back(q.get_num() * scale);
  }
  return view;
}

std::vector<Rational> from_integers(std::vector<mpz_class>& acc, const mpz_class& denominator) {
  std::vector<Rational> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] != 0) out[k] = Rational(acc[k], denominator);
  }
  return out;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t precision) : coeffs_(precision) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t precision) {
  return monomial(c, 0, precision);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t k, std::size_t precision) {
  TruncatedSeries s(precision);
  if (k < precision) s.coeffs_[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
  std::vector<Rational> c(precision);
  std::copy_n(coeffs_.begin(), std::min(precision, coeffs_.size()), c.begin());
  return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.is_zero(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t prec = std::min(a.precision(), b.precision());
  const IntegerView lhs = integer_view(a.coefficients(), prec);
  const IntegerView rhs = integer_view(b.coefficients(), prec);
  std::vector<mpz_class> acc(prec);
  for (std::size_t i = 0; i < lhs.support.size(); ++i) {
    const std::size_t di = lhs.support[i];
    for (std::size_t j = 0; j < rhs.support.size(); ++j) {
      const std::size_t k = di + rhs.support[j];
      if (k >= prec) break;
      mpz_addmul(acc[k].get_mpz_t(), lhs.numerators[i].get_mpz_t(), rhs.numerators[j].get_mpz_t());
    }
  }
  return TruncatedSeries(from_integers(acc, lhs.denominator * rhs.denominator));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const std::size_t prec = a.precision();
  if (prec == 0) return a;
  if (a[0].is_zero()) {
    throw Error(ErrorCode::ZeroConstantTerm, "rational-series",
                "series_inverse: constant term is zero (not a unit)");
  }
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j < prec; ++j) {
    if (!a[j].is_zero()) support.push_back(j);
  }
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> r(prec);
  r[0] = inv0;
  mpq_class sum;
  for (std::size_t k = 1; k < prec; ++k) {
    sum = 0;
    for (std::size_t j : support) {
      if (j > k) break;
      if (!r[k - j].is_zero()) sum += a[j].raw() * r[k - j].raw();
    }
    if (sgn(sum) != 0) r[k] = -Rational(sum) * inv0;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.precision());
  TruncatedSeries base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = series_mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.precision() == 0) return a;
  std::vector<Rational> d(a.precision() - 1);
  for (std::size_t k = 1; k < a.precision(); ++k) {
    if (!a[k].is_zero()) d[k - 1] = a[k] * Rational(static_cast<long>(k));
  }
  return TruncatedSeries(std::move(d));
}

std::optional<std::size_t> vanishing_order(const TruncatedSeries& a) {
  for (std::size_t k = 0; k < a.precision(); ++k) {
    if (!a[k].is_zero()) return k;
  }
  return std::nullopt;
}

TruncatedSeries linear_combination(std::span<const Rational> weights,
                                   std::span<const TruncatedSeries> terms) {
  if (weights.size() != terms.size()) {
    throw Error(ErrorCode::InvalidArgument, "rational-series",
                "linear_combination: weight/term count mismatch");
  }
  if (terms.empty()) return TruncatedSeries(0);
  std::size_t prec = terms.front().precision();
  for (const auto& t : terms) prec = std::min(prec, t.precision());

  std::vector<IntegerView> views;
  std::vector<std::size_t> used;
  mpz_class common = 1;
  for (std::size_t p = 0; p < terms.size(); ++p) {
    if (weights[p].is_zero()) continue;
    views.push_back(integer_view(terms[p].coefficients(), prec));
    used.push_back(p);
    const mpz_class d = views.back().denominator * weights[p].denominator();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> acc(prec);
  mpz_class factor;
  for (std::size_t v = 0; v < views.size(); ++v) {
    const Rational& w = weights[used[v]];
    const mpz_class d = views[v].denominator * w.denominator();
    mpz_divexact(factor.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
    factor *= w.numerator();
    for (std::size_t k = 0; k < views[v].support.size(); ++k) {
      mpz_addmul(acc[views[v].support[k]].get_mpz_t(), factor.get_mpz_t(),
                 views[v].numerators[k].get_mpz_t());
    }
  }
  return TruncatedSeries(from_integers(acc, common));
}

TruncatedSeries compose_polynomial(std::span<const Rational> polynomial, const TruncatedSeries& s) {
  TruncatedSeries acc(s.precision());
  for (auto it = polynomial.rbegin(); it != polynomial.rend(); ++it) {
    acc = series_mul(acc, s);
    acc += TruncatedSeries::constant(*it, s.precision());
  }
  return acc;
}

} // namespace gmap
