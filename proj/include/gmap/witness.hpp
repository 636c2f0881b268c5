#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gmap/cover_model.hpp"
#include "gmap/gaussian_maps.hpp"

namespace gmap {

/// The rank-4 quadric omega_{p,0} (.) omega_{q,1} - omega_{p,1} (.) omega_{q,0}
/// (for p == q: omega_{p,0} (.) omega_{p,2} - omega_{p,1} (.) omega_{p,1}).
/// Both terms equal x omega_{p,0} omega_{q,0}, so it lies in I_2(K).
RationalVector rank_four_quadric(const FormBasis& basis, int p, int q);

struct WitnessQuadric {
  std::string name;  // e.g. "w(2,0).w(2,2) - w(2,1).w(2,1)"
  int p = 0;
  int q = 0;
  RationalVector coefficients;
  bool in_kernel = false;
  std::optional<int> character;
  TruncatedSeries mu2{0};
  std::size_t precision = 0;

  bool invariant() const { return character && *character == 0; }
  bool nonzero() const { return !mu2.is_zero(); }
};

struct WitnessReport {
  GaloisFamilyClass family;
  std::vector<int> eigenspace_dims;
  std::vector<Rational> branch_points;
  /// First entry is the construction for this g'; a full-group invariant
  /// companion follows for g' <= 2 when the eigenspaces allow it.
  std::vector<WitnessQuadric> quadrics;
};

/// Builds the non-totally-geodesic witness quadric(s) on class
/// `class_index` of enumerate_galois(g, gprime). A witness series that is
/// zero to precision is retried at doubled precision up to max_precision.
/// Throws DegenerateWitness when the needed eigenspace is too small.
WitnessReport find_witness(int g, int gprime, std::size_t class_index = 0,
                           std::optional<std::size_t> precision = std::nullopt,
                           std::size_t max_precision = 600);

} // namespace gmap
