#include "gmap/witness.hpp"

#include <algorithm>

#include "gmap/error.hpp"

namespace gmap {

namespace {

std::size_t form_index(const FormBasis& basis, int n, int nu) {
  const auto k = basis.index_of({n, nu});
  if (k < 0) {
    throw Error(ErrorCode::DegenerateWitness, "gaussian-maps",
                "form omega_{" + std::to_string(n) + "," + std::to_string(nu) + "} does not exist");
  }
  return static_cast<std::size_t>(k);
}

std::string describe(int p, int q) {
  auto w = [](int n, int nu) { return "w(" + std::to_string(n) + "," + std::to_string(nu) + ")"; };
  if (p == q) return w(p, 0) + "." + w(p, 2) + " - " + w(p, 1) + "." + w(p, 1);
  return w(p, 0) + "." + w(q, 1) + " - " + w(p, 1) + "." + w(q, 0);
}

int dim(const std::vector<int>& dims, int n) { return dims[static_cast<std::size_t>(n - 1)]; }

WitnessQuadric evaluate(int p, int q, const MonodromyDatum& d, const std::vector<Rational>& t,
                        std::size_t precision, std::size_t max_precision) {
  WitnessQuadric w;
  w.name = describe(p, q);
  w.p = p;
  w.q = q;
  for (;;) {
    const FormBasis basis = canonical_form_basis(branch_solve(d, t, precision));
    w.coefficients = rank_four_quadric(basis, p, q);
    w.in_kernel = contract_products(basis, w.coefficients).is_zero();
    w.character = quadric_character(basis, w.coefficients);
    w.mu2 = mu2_of_quadric(basis, w.coefficients);
    w.precision = precision;
    if (!w.mu2.is_zero() || precision >= max_precision) return w;
    precision = std::min(precision * 2, max_precision);
  }
}

} // namespace

RationalVector rank_four_quadric(const FormBasis& basis, int p, int q) {
  const std::size_t g = basis.genus();
  RationalVector v(g * (g + 1) / 2);
  if (p == q) {
    v[pair_index(form_index(basis, p, 0), form_index(basis, p, 2), g)] += 1;
    v[pair_index(form_index(basis, p, 1), form_index(basis, p, 1), g)] -= 1;
  } else {
    v[pair_index(form_index(basis, p, 0), form_index(basis, q, 1), g)] += 1;
    v[pair_index(form_index(basis, p, 1), form_index(basis, q, 0), g)] -= 1;
  }
  return v;
}

WitnessReport find_witness(int g, int gprime, std::size_t class_index,
                           std::optional<std::size_t> precision, std::size_t max_precision) {
  const auto classes = enumerate_galois(g, gprime);
  if (class_index >= classes.size()) {
    throw Error(ErrorCode::InvalidArgument, "gaussian-maps",
                "class index " + std::to_string(class_index + 1) + " out of range (" +
                    std::to_string(classes.size()) + " classes)");
  }
  WitnessReport report;
  report.family = classes[class_index];
  const MonodromyDatum& d = report.family.representative;
  report.eigenspace_dims = eigenspace_dimensions(d);
  report.branch_points = default_branch_points(d.branch_count());
  const auto& dims = report.eigenspace_dims;
  const std::size_t prec = precision.value_or(default_precision(g));

  auto degenerate = [&](const std::string& why) {
    return Error(ErrorCode::DegenerateWitness, "gaussian-maps",
                 why + " on " + shorthand(d) + "; another component is needed");
  };

  if (gprime >= 3) {
    if (dim(dims, 2) < 3) throw degenerate("dim V_2 = " + std::to_string(dim(dims, 2)) + " < 3");
    report.quadrics.push_back(evaluate(2, 2, d, report.branch_points, prec, max_precision));
  } else if (gprime == 2) {
    if (dim(dims, 1) < 3) throw degenerate("d_1 = " + std::to_string(dim(dims, 1)) + " < 3");
    report.quadrics.push_back(evaluate(1, 1, d, report.branch_points, prec, max_precision));
    if (dim(dims, 1) >= 2 && dim(dims, 3) >= 2) {
      report.quadrics.push_back(evaluate(1, 3, d, report.branch_points, prec, max_precision));
    }
  } else {
    if (dim(dims, 1) < 2 || dim(dims, 3) < 2) {
      throw degenerate("need d_1, d_3 >= 2 (have " + std::to_string(dim(dims, 1)) + ", " +
                       std::to_string(dim(dims, 3)) + ")");
    }
    report.quadrics.push_back(evaluate(1, 3, d, report.branch_points, prec, max_precision));
  }
  return report;
}

} // namespace gmap
