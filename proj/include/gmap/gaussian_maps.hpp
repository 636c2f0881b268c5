#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmap/cover_model.hpp"
#include "gmap/kernels.hpp"
#include "gmap/matrix.hpp"

namespace gmap {

/// Position of the unordered pair {i, j} in the (0,0), (0,1), ..., (0,g-1),
/// (1,1), ... ordering used for all symmetric coefficient vectors.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t genus);
std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(std::size_t genus);

/// f_i f_j and f_i' f_j' for all pairs i <= j of a form basis.
class ProductTable {
public:
  explicit ProductTable(const FormBasis& basis, kernels::Execution ex = kernels::Execution::parallel);

  std::size_t genus() const noexcept { return genus_; }
  const std::vector<TruncatedSeries>& products() const noexcept { return products_; }
  const std::vector<TruncatedSeries>& derivative_products() const noexcept { return derivative_products_; }

private:
  std::size_t genus_;
  std::vector<TruncatedSeries> products_;
  std::vector<TruncatedSeries> derivative_products_;
};

/// Kernel of S^2 H^0(K) -> H^0(2K), as coefficient vectors over the
/// symmetric pairs.
struct QuadricSpace {
  std::size_t genus = 0;
  std::vector<RationalVector> basis_vectors;
  std::size_t dimension() const noexcept { return basis_vectors.size(); }
};

/// One row per pair (i <= j): the coefficients of f_i f_j.
RationalMatrix multiplication_matrix(const ProductTable& table);
RationalMatrix multiplication_matrix(const FormBasis& basis);

/// Nullspace of the transposed multiplication matrix; every vector is
/// re-checked to annihilate the products to precision.
QuadricSpace quadric_space(const ProductTable& table,
                           kernels::Execution ex = kernels::Execution::parallel);
QuadricSpace quadric_space(const FormBasis& basis);

/// Rank of the stacked coefficient rows of sum_p K_p f_i' f_j' over the
/// quadric basis. A certified lower bound for rank mu_2.
std::size_t mu2_rank(const ProductTable& table, const QuadricSpace& q,
                     kernels::Execution ex = kernels::Execution::parallel);
std::size_t mu2_rank(const FormBasis& basis, const QuadricSpace& q);

enum class Mu1Selector { WedgeW1, WedgeW3, W1TensorW3, Full };

/// Sub-basis indices behind each side of a selector: W_1 = {omega_{1,nu},
/// nu >= 1}, W_3 = {omega_{3,nu}, nu >= 1}.
std::vector<std::size_t> weight_subspace(const FormBasis& basis, int character);

/// mu_1(s_i ^ s_j) = f_i' f_j - f_i f_j'.
TruncatedSeries mu1(const TruncatedSeries& fi, const TruncatedSeries& fj);

/// Rank of mu_1 on the selected wedge/tensor pairs. Requires m = 4 for the
/// W selectors; throws SubspaceTooSmall when the selection is degenerate.
std::size_t mu1_restricted_rank(const FormBasis& basis, Mu1Selector selector,
                                kernels::Execution ex = kernels::Execution::parallel);

/// Contraction sum_{i<=j} Q_ij f_i f_j (zero for a quadric).
TruncatedSeries contract_products(const FormBasis& basis, const RationalVector& q);

/// sum_{i<=j} Q_ij f_i' f_j'. Throws NotAQuadric unless Q annihilates the
/// products to precision.
TruncatedSeries mu2_of_quadric(const FormBasis& basis, const RationalVector& q);

/// Residue c with n_i + n_j = c (mod m) for every nonzero Q_ij, or nullopt
/// when Q mixes characters. The zero vector reports 0.
std::optional<int> quadric_character(const FormBasis& basis, const RationalVector& q);

struct PrecisionPolicy {
  enum class Kind { Fixed, Escalate };
  Kind kind = Kind::Fixed;
  std::size_t start = 150;
  std::size_t factor = 2;
  std::size_t max = 600;

  static PrecisionPolicy fixed(std::size_t precision) { return {Kind::Fixed, precision, 1, precision}; }
  static PrecisionPolicy escalate(std::size_t start, std::size_t factor, std::size_t max) {
    return {Kind::Escalate, start, factor, max};
  }
  /// "fixed:150" or "escalate:150:2:600".
  std::string to_string() const;
  /// Precision levels visited, in order.
  std::vector<std::size_t> levels() const;
};

struct RankReport {
  MonodromyDatum datum;
  std::vector<Rational> branch_points;
  int genus = 0;
  std::string policy;
  std::size_t precision_used = 0;
  std::size_t mult_rank = 0;
  std::size_t i2_dim = 0;
  std::size_t mu2_rank_lower_bound = 0;
  /// "saturated" (rank = dim I_2, cannot grow), "agreed" (two successive
  /// precisions gave the same rank) or "unconfirmed".
  std::string stability;
  bool stable = false;
  std::chrono::milliseconds elapsed{0};

  bool saturated() const noexcept { return mu2_rank_lower_bound == i2_dim; }
  /// Violated report invariants (mult rank <= 3g-3, dim I_2 bounds, ...).
  std::vector<std::string> invariant_violations() const;
};

/// Runs the full pipeline on a normalized datum; with an escalating policy
/// it stops once two consecutive levels agree (or the rank saturates).
RankReport stable_rank(const MonodromyDatum& d, const std::vector<Rational>& t,
                       const PrecisionPolicy& policy,
                       kernels::Execution ex = kernels::Execution::parallel);

} // namespace gmap
