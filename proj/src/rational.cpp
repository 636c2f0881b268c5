#include "gmap/rational.hpp"

#include <cctype>

#include "gmap/error.hpp"

namespace gmap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
  case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
  case ErrorCode::InvalidDatum: return "InvalidDatum";
  case ErrorCode::EmptyLocus: return "EmptyLocus";
  case ErrorCode::NoTotallyRamifiedPoint: return "NoTotallyRamifiedPoint";
  case ErrorCode::RepeatedBranchPoints: return "RepeatedBranchPoints";
  case ErrorCode::NotNormalized: return "NotNormalized";
  case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
  case ErrorCode::SubspaceTooSmall: return "SubspaceTooSmall";
  case ErrorCode::NotAQuadric: return "NotAQuadric";
  case ErrorCode::DegenerateWitness: return "DegenerateWitness";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ResourceCapExceeded: return "ResourceCapExceeded";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational-series", "zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "rational-series", "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError(0, "expected an integer in '" + std::string(text) + "'");
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw ParseError(i, "unexpected character in '" + std::string(text) + "'");
      }
    }
    std::string owned(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(owned, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError(slash + 1, "zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

} // namespace gmap
