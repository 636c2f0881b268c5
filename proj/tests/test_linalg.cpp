#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gmap/kernels.hpp"
#include "support.hpp"

using namespace gmap;
using gmap::testing::property_cases;
using gmap::testing::random_matrix;
using gmap::testing::random_matrix_of_rank;
using gmap::testing::uniform;

namespace {

// Textbook Gauss-Jordan over mpq, used as an oracle.
std::size_t oracle_rank(const RationalMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).raw();
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

} // namespace

TEST_CASE("rank of small explicit matrices") {
  const std::vector<RationalVector> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, Rational::parse("1/2")}};
  const auto m = RationalMatrix::from_rows(rows);
  CHECK(rank(m) == 2);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK(rank(RationalMatrix::identity(5)) == 5);
}

TEST_CASE("nullspace basis of a known matrix") {
  const std::vector<RationalVector> rows{{1, 1, 0}, {0, 0, 1}};
  const auto ns = nullspace(RationalMatrix::from_rows(rows));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RationalVector{-1, 1, 0});
}

TEST_CASE("zero columns give unit nullspace vectors") {
  const std::vector<RationalVector> rows{{0, 3, 0}};
  const auto ns = nullspace(RationalMatrix::from_rows(rows));
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == RationalVector{1, 0, 0});
  CHECK(ns[1] == RationalVector{0, 0, 1});
}

TEST_CASE("from_rows pads short rows") {
  const std::vector<RationalVector> rows{{1}, {1, 2, 3}};
  const auto m = RationalMatrix::from_rows(rows);
  CHECK(m.cols() == 3);
  CHECK(m(0, 2).is_zero());
}

TEST_CASE("property: rank agrees with the mpq oracle") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto m = random_matrix(static_cast<std::size_t>(uniform(1, 9)), static_cast<std::size_t>(uniform(1, 9)),
                                 static_cast<int>(uniform(0, 3)));
    CHECK(rank(m, kernels::Execution::serial) == oracle_rank(m));
    CHECK(rank(m, kernels::Execution::parallel) == oracle_rank(m));
  }
}

TEST_CASE("property: prescribed rank is recovered") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform(2, 10));
    const auto cols = static_cast<std::size_t>(uniform(2, 10));
    const auto k = static_cast<std::size_t>(uniform(0, static_cast<long>(std::min(rows, cols))));
    const auto m = random_matrix_of_rank(rows, cols, k);
    CHECK(rank(m) == oracle_rank(m));
    CHECK(rank(m) <= k);
  }
}

TEST_CASE("property: nullspace membership and rank-nullity") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto m = random_matrix(static_cast<std::size_t>(uniform(1, 8)), static_cast<std::size_t>(uniform(1, 10)),
                                 static_cast<int>(uniform(0, 3)));
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == m.cols());
    for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
    if (!ns.empty()) CHECK(rank(RationalMatrix::from_rows(ns)) == ns.size());
  }
}

TEST_CASE("property: rank is invariant under row permutation and scaling") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto m = random_matrix(static_cast<std::size_t>(uniform(1, 8)), static_cast<std::size_t>(uniform(1, 8)), 1);
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gmap::testing::rng());
    std::vector<RationalVector> rows;
    for (std::size_t r : order) {
      RationalVector row(m.row(r).begin(), m.row(r).end());
      const Rational s = gmap::testing::random_nonzero_rational();
      for (auto& x : row) x *= s;
      rows.push_back(std::move(row));
    }
    CHECK(rank(RationalMatrix::from_rows(rows)) == rank(m));
    CHECK(rank(m.transposed()) == rank(m));
  }
}

TEST_CASE("property: nullspace is deterministic and serial equals parallel") {
  for (int trial = 0; trial < property_cases; ++trial) {
    const auto m = random_matrix(static_cast<std::size_t>(uniform(1, 8)), static_cast<std::size_t>(uniform(1, 8)), 2);
    CHECK(nullspace(m, kernels::Execution::serial) == nullspace(m, kernels::Execution::parallel));
    CHECK(nullspace(m) == nullspace(m));
  }
}

TEST_CASE("property: serial and parallel elimination kernels agree") {
  for (int trial = 0; trial < property_cases; ++trial) {
    kernels::IntegerRows rows(static_cast<std::size_t>(uniform(1, 8)),
                              kernels::IntegerRow(static_cast<std::size_t>(uniform(1, 8))));
    for (auto& row : rows) {
      for (auto& x : row) x = uniform(0, 2) == 0 ? 0 : uniform(-20, 20);
    }
    auto a = rows;
    auto b = rows;
    CHECK(kernels::eliminate_rank_serial(a) == kernels::eliminate_rank_parallel(b));
    CHECK(a == b);
    auto c = rows;
    auto d = rows;
    const auto ec = kernels::reduce_echelon_serial(c);
    const auto ed = kernels::reduce_echelon_parallel(d);
    CHECK(ec.pivot_columns == ed.pivot_columns);
    CHECK(ec.denominator == ed.denominator);
    CHECK(c == d);
  }
}

TEST_CASE("property: serial and parallel pair products agree") {
  for (int trial = 0; trial < property_cases; ++trial) {
    std::vector<TruncatedSeries> forms;
    const auto n = uniform(1, 6);
    for (long k = 0; k < n; ++k) forms.push_back(gmap::testing::random_series(10, static_cast<std::size_t>(uniform(0, 3))));
    for (bool derivatives : {false, true}) {
      const auto s = kernels::pair_products_serial(forms, derivatives);
      CHECK(s == kernels::pair_products_parallel(forms, derivatives));
      CHECK(s.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    }
  }
}
