#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gmap/rational.hpp"

namespace gmap {

/// Power series in one variable y, known exactly modulo y^precision.
///
/// The coefficient vector always has exactly `precision` entries. Binary
/// operations on operands of different precision truncate to the smaller
/// one, so a derivative (precision p-1) can be mixed with its source.
class TruncatedSeries {
public:
  /// The zero series at the given precision.
  explicit TruncatedSeries(std::size_t precision);
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(const Rational& c, std::size_t precision);
  /// c * y^k (zero if k >= precision).
  static TruncatedSeries monomial(const Rational& c, std::size_t k, std::size_t precision);

  std::size_t precision() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Copy restricted to the first `precision` coefficients (or padded
  /// with zeros if larger).
  TruncatedSeries truncated(std::size_t precision) const;
  bool is_zero() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to min(prec(a), prec(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Reciprocal of a unit series; throws ZeroConstantTerm if a(0) = 0.
TruncatedSeries series_inverse(const TruncatedSeries& a);

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent);

/// Termwise derivative; the result has precision prec(a) - 1.
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// Index of the first nonzero coefficient, or std::nullopt when every
/// stored coefficient vanishes (zero to precision, not provably zero).
std::optional<std::size_t> vanishing_order(const TruncatedSeries& a);

/// sum_k weights[k] * terms[k], truncated to the smallest term precision.
/// Works over a common denominator, which is much cheaper than
/// accumulating rationals one product at a time.
TruncatedSeries linear_combination(std::span<const Rational> weights,
                                   std::span<const TruncatedSeries> terms);

/// p(s) for a polynomial p given by ascending coefficients (Horner).
TruncatedSeries compose_polynomial(std::span<const Rational> polynomial, const TruncatedSeries& s);

} // namespace gmap
