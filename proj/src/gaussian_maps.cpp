#include "gmap/gaussian_maps.hpp"

#include <algorithm>
#include <sstream>

#include "gmap/error.hpp"

namespace gmap {

namespace {

std::vector<RationalVector> coefficient_rows(const std::vector<TruncatedSeries>& series) {
  std::vector<RationalVector> rows;
  rows.reserve(series.size());
  for (const auto& s : series) rows.emplace_back(s.coefficients().begin(), s.coefficients().end());
  return rows;
}

void check_quadric_length(const FormBasis& basis, const RationalVector& q) {
  const std::size_t g = basis.genus();
  if (q.size() != g * (g + 1) / 2) {
    throw Error(ErrorCode::InvalidArgument, "gaussian-maps",
                "quadric vector has " + std::to_string(q.size()) + " entries, expected " +
                    std::to_string(g * (g + 1) / 2));
  }
}

// Selected entries of a symmetric vector, with the series they weight.
template <typename Make>
TruncatedSeries contract(const FormBasis& basis, const RationalVector& q, Make make) {
  check_quadric_length(basis, q);
  std::vector<Rational> weights;
  std::vector<TruncatedSeries> terms;
  const auto pairs = symmetric_pairs(basis.genus());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (q[p].is_zero()) continue;
    weights.push_back(q[p]);
    terms.push_back(make(basis.series[pairs[p].first], basis.series[pairs[p].second]));
  }
  if (terms.empty()) {
    return TruncatedSeries(basis.series.empty() ? 0 : make(basis.series[0], basis.series[0]).precision());
  }
  return linear_combination(weights, terms);
}

TruncatedSeries derivative_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(series_derivative(a), series_derivative(b));
}

} // namespace

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t genus) {
  if (i > j) std::swap(i, j);
  // Rows before i contribute g + (g-1) + ... + (g-i+1).
  return i * genus - i * (i - 1) / 2 + (j - i);
}

std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(std::size_t genus) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(genus * (genus + 1) / 2);
  for (std::size_t i = 0; i < genus; ++i) {
    for (std::size_t j = i; j < genus; ++j) out.emplace_back(i, j);
  }
  return out;
}

ProductTable::ProductTable(const FormBasis& basis, kernels::Execution ex)
    : genus_(basis.genus()),
      products_(kernels::pair_products(basis.series, false, ex)),
      derivative_products_(kernels::pair_products(basis.series, true, ex)) {}

RationalMatrix multiplication_matrix(const ProductTable& table) {
  const auto rows = coefficient_rows(table.products());
  return RationalMatrix::from_rows(rows);
}

RationalMatrix multiplication_matrix(const FormBasis& basis) {
  return multiplication_matrix(ProductTable(basis));
}

QuadricSpace quadric_space(const ProductTable& table, kernels::Execution ex) {
  QuadricSpace q;
  q.genus = table.genus();
  q.basis_vectors = nullspace(multiplication_matrix(table).transposed(), ex);
  for (const auto& v : q.basis_vectors) {
    if (!linear_combination(v, table.products()).is_zero()) {
      throw Error(ErrorCode::NotAQuadric, "gaussian-maps",
                  "nullspace vector does not annihilate the products");
    }
  }
  return q;
}

QuadricSpace quadric_space(const FormBasis& basis) { return quadric_space(ProductTable(basis)); }

std::size_t mu2_rank(const ProductTable& table, const QuadricSpace& q, kernels::Execution ex) {
  if (q.dimension() == 0) return 0;
  std::vector<RationalVector> rows;
  rows.reserve(q.dimension());
  for (const auto& v : q.basis_vectors) {
    const TruncatedSeries omega = linear_combination(v, table.derivative_products());
    rows.emplace_back(omega.coefficients().begin(), omega.coefficients().end());
  }
  return rank(RationalMatrix::from_rows(rows), ex);
}

std::size_t mu2_rank(const FormBasis& basis, const QuadricSpace& q) {
  return mu2_rank(ProductTable(basis), q);
}

std::vector<std::size_t> weight_subspace(const FormBasis& basis, int character) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis.labels.size(); ++k) {
    if (basis.labels[k].n == character && basis.labels[k].nu >= 1) out.push_back(k);
  }
  return out;
}

TruncatedSeries mu1(const TruncatedSeries& fi, const TruncatedSeries& fj) {
  return series_mul(series_derivative(fi), fj) - series_mul(fi, series_derivative(fj));
}

std::size_t mu1_restricted_rank(const FormBasis& basis, Mu1Selector selector, kernels::Execution ex) {
  if (selector != Mu1Selector::Full && basis.m != 4) {
    throw Error(ErrorCode::InvalidArgument, "gaussian-maps",
                "W_1/W_3 selectors are defined for Z/4 covers only");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto wedge = [&](const std::vector<std::size_t>& w, const char* name) {
    if (w.size() < 2) {
      throw Error(ErrorCode::SubspaceTooSmall, "gaussian-maps",
                  std::string(name) + " has " + std::to_string(w.size()) + " element(s), need 2");
    }
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t b = a + 1; b < w.size(); ++b) pairs.emplace_back(w[a], w[b]);
    }
  };
  switch (selector) {
  case Mu1Selector::WedgeW1: wedge(weight_subspace(basis, 1), "W_1"); break;
  case Mu1Selector::WedgeW3: wedge(weight_subspace(basis, 3), "W_3"); break;
  case Mu1Selector::Full: {
    std::vector<std::size_t> all(basis.genus());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    wedge(all, "H^0(K)");
    break;
  }
  case Mu1Selector::W1TensorW3: {
    const auto w1 = weight_subspace(basis, 1);
    const auto w3 = weight_subspace(basis, 3);
    if (w1.empty() || w3.empty() || w1.size() + w3.size() < 2) {
      throw Error(ErrorCode::SubspaceTooSmall, "gaussian-maps",
                  "W_1 (x) W_3 is zero: dim W_1 = " + std::to_string(w1.size()) +
                      ", dim W_3 = " + std::to_string(w3.size()));
    }
    for (std::size_t i : w1) {
      for (std::size_t j : w3) pairs.emplace_back(i, j);
    }
    break;
  }
  }
  std::vector<RationalVector> rows(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  auto build = [&](std::ptrdiff_t p) {
    const auto s = mu1(basis.series[pairs[p].first], basis.series[pairs[p].second]);
    rows[p].assign(s.coefficients().begin(), s.coefficients().end());
  };
  if (ex == kernels::Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < count; ++p) build(p);
  } else {
    for (std::ptrdiff_t p = 0; p < count; ++p) build(p);
  }
  return rank(RationalMatrix::from_rows(rows), ex);
}

TruncatedSeries contract_products(const FormBasis& basis, const RationalVector& q) {
  return contract(basis, q, [](const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); });
}

TruncatedSeries mu2_of_quadric(const FormBasis& basis, const RationalVector& q) {
  if (!contract_products(basis, q).is_zero()) {
    throw Error(ErrorCode::NotAQuadric, "gaussian-maps",
                "vector does not lie in I_2(K): sum Q_ij f_i f_j is nonzero to precision");
  }
  return contract(basis, q, derivative_product);
}

std::optional<int> quadric_character(const FormBasis& basis, const RationalVector& q) {
  check_quadric_length(basis, q);
  std::optional<int> character;
  const auto pairs = symmetric_pairs(basis.genus());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (q[p].is_zero()) continue;
    const int c = (basis.labels[pairs[p].first].n + basis.labels[pairs[p].second].n) % basis.m;
    if (character && *character != c) return std::nullopt;
    character = c;
  }
  return character.value_or(0);
}

std::string PrecisionPolicy::to_string() const {
  std::ostringstream os;
  if (kind == Kind::Fixed) {
    os << "fixed:" << start;
  } else {
    os << "escalate:" << start << ':' << factor << ':' << max;
  }
  return os.str();
}

std::vector<std::size_t> PrecisionPolicy::levels() const {
  if (kind == Kind::Fixed) return {start};
  std::vector<std::size_t> out{std::min(start, max)};
  while (out.back() < max && factor > 1) out.push_back(std::min(out.back() * factor, max));
  return out;
}

std::vector<std::string> RankReport::invariant_violations() const {
  std::vector<std::string> out;
  const long g = genus;
  if (g >= 2 && static_cast<long>(mult_rank) > 3 * g - 3) {
    out.push_back("mult_rank " + std::to_string(mult_rank) + " > 3g-3");
  }
  if (g >= 3 && static_cast<long>(i2_dim) < (g - 2) * (g - 3) / 2) {
    out.push_back("i2_dim " + std::to_string(i2_dim) + " < (g-2)(g-3)/2");
  }
  if (mu2_rank_lower_bound > i2_dim) out.push_back("mu2 rank exceeds dim I_2");
  if (g >= 1 && static_cast<long>(mu2_rank_lower_bound) > 7 * g - 7) out.push_back("mu2 rank exceeds 7g-7");
  return out;
}

RankReport stable_rank(const MonodromyDatum& d, const std::vector<Rational>& t,
                       const PrecisionPolicy& policy, kernels::Execution ex) {
  const auto started = std::chrono::steady_clock::now();
  const int g = genus(d);
  std::optional<RankReport> previous;
  RankReport report;
  for (std::size_t prec : policy.levels()) {
    const CoverModel cover = branch_solve(d, t, prec);
    const FormBasis basis = canonical_form_basis(cover, ex);
    const ProductTable table(basis, ex);
    const QuadricSpace quadrics = quadric_space(table, ex);

    report = RankReport{};
    report.datum = d;
    report.branch_points = t;
    report.genus = g;
    report.policy = policy.to_string();
    report.precision_used = prec;
    report.i2_dim = quadrics.dimension();
    report.mult_rank = table.products().size() - report.i2_dim;
    report.mu2_rank_lower_bound = mu2_rank(table, quadrics, ex);

    if (report.saturated()) {
      report.stability = "saturated";
    } else if (previous && previous->mu2_rank_lower_bound == report.mu2_rank_lower_bound) {
      report.stability = "agreed";
    } else {
      report.stability = "unconfirmed";
    }
    report.stable = report.stability != "unconfirmed";
    if (report.stable) break;
    previous = report;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

} // namespace gmap
