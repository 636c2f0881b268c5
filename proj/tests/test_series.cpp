#include <doctest.h>

#include "gmap/error.hpp"
#include "support.hpp"

using namespace gmap;
using gmap::testing::property_cases;
using gmap::testing::random_series;
using gmap::testing::uniform;

namespace {

TruncatedSeries series(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return TruncatedSeries(std::move(v));
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/-4").to_string() == "-3/2");
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(mpz_class(4), mpz_class(-6)) == Rational::parse("-2/3"));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("geometric series inverse") {
  const auto inv = series_inverse(series({1, -1, 0, 0, 0, 0}));
  CHECK(inv == series({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("inverse of a series without constant term fails") {
  try {
    series_inverse(series({0, 1, 2}));
    FAIL("expected ZeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroConstantTerm);
  }
}

TEST_CASE("products truncate to the shorter precision") {
  const auto a = series({1, 1, 1, 1});
  const auto b = series({1, 2});
  CHECK(series_mul(a, b) == series({1, 3}));
  CHECK(series_pow(series({1, 1, 0, 0, 0}), 4) == series({1, 4, 6, 4, 1}));
  CHECK(series_pow(series({2, 1, 0}), 0) == series({1, 0, 0}));
}

TEST_CASE("derivative drops one coefficient") {
  const auto d = series_derivative(series({5, 1, 1, 1}));
  CHECK(d == series({1, 2, 3}));
  CHECK(series_derivative(TruncatedSeries(0)).precision() == 0);
}

TEST_CASE("vanishing order") {
  CHECK(vanishing_order(series({0, 0, 3, 1})) == 2);
  CHECK_FALSE(vanishing_order(series({0, 0, 0})).has_value());
}

TEST_CASE("polynomial composition") {
  // (1 + s)^2 with s = y
  const std::vector<Rational> p{1, 2, 1};
  CHECK(compose_polynomial(p, series({0, 1, 0, 0})) == series({1, 2, 1, 0}));
}

TEST_CASE("linear combination agrees with repeated addition") {
  for (int trial = 0; trial < property_cases; ++trial) {
    std::vector<Rational> w;
    std::vector<TruncatedSeries> s;
    TruncatedSeries expected(12);
    for (int k = 0; k < 4; ++k) {
      w.push_back(gmap::testing::random_rational());
      s.push_back(random_series(12));
      expected += s.back() * w.back();
    }
    CHECK(linear_combination(w, s) == expected);
  }
}

TEST_CASE("property: ring laws") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const std::size_t prec = static_cast<std::size_t>(uniform(1, 14));
    const auto a = random_series(prec);
    const auto b = random_series(prec);
    const auto c = random_series(prec);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == TruncatedSeries(prec));
    CHECK(series_mul(a, TruncatedSeries::constant(1, prec)) == a);
  }
}

TEST_CASE("property: inverse round-trip") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const std::size_t prec = static_cast<std::size_t>(uniform(1, 16));
    const auto a = random_series(prec);
    CHECK(series_mul(a, series_inverse(a)) == TruncatedSeries::constant(1, prec));
    CHECK(series_inverse(series_inverse(a)) == a);
  }
}

TEST_CASE("property: Leibniz rule") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const std::size_t prec = static_cast<std::size_t>(uniform(2, 16));
    const auto a = random_series(prec);
    const auto b = random_series(prec);
    const auto lhs = series_derivative(series_mul(a, b));
    const auto rhs = series_mul(series_derivative(a), b.truncated(prec - 1)) +
                     series_mul(a.truncated(prec - 1), series_derivative(b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: vanishing orders add under multiplication") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto i = static_cast<std::size_t>(uniform(0, 5));
    const auto j = static_cast<std::size_t>(uniform(0, 5));
    const auto a = random_series(14, i);
    const auto b = random_series(14, j);
    CHECK(vanishing_order(series_mul(a, b)) == i + j);
  }
}

TEST_CASE("property: powers agree with repeated products") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto a = random_series(10);
    const auto e = static_cast<unsigned>(uniform(0, 6));
    TruncatedSeries expected = TruncatedSeries::constant(1, 10);
    for (unsigned k = 0; k < e; ++k) expected = series_mul(expected, a);
    CHECK(series_pow(a, e) == expected);
  }
}
