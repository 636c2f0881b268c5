#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gmap/rational.hpp"

namespace gmap {

/// Cyclic Z/m cover of the projective line branched over r points, the
/// i-th with local monodromy residue a[i].
struct MonodromyDatum {
  int m = 2;
  std::vector<int> a;

  std::size_t branch_count() const noexcept { return a.size(); }
  friend bool operator==(const MonodromyDatum&, const MonodromyDatum&) = default;
};

enum class Violation {
  OrderTooSmall,       // m < 2
  ResidueOutOfRange,   // some a_i not in 1..m-1
  SumNotZero,          // sum a_i != 0 mod m
  NotSurjective,       // gcd(a_1..a_r, m) != 1
  TooFewBranchPoints,  // r < 3 (genus-0 quotient needs at least three)
};

struct ViolationReport {
  Violation kind;
  std::string message;
};

/// Every invariant violation of d, in a fixed order; empty means valid.
std::vector<ViolationReport> validate(const MonodromyDatum& d);
std::string_view to_string(Violation v);

/// Riemann-Hurwitz genus of the cover; throws NonIntegralGenus when the
/// Euler characteristic is not an even integer, InvalidDatum when d fails
/// validation.
int genus(const MonodromyDatum& d);

/// d_n = dim of the zeta^n eigenspace of H^0(K), for n = 1..m-1
/// (index 0 of the result holds d_1).
std::vector<int> eigenspace_dimensions(const MonodromyDatum& d);

/// Hurwitz-equivalent datum with a_1 = 1: scale by the inverse of the
/// first unit residue, then swap that entry to the front. Throws
/// NoTotallyRamifiedPoint when no residue is a unit mod m.
MonodromyDatum normalize(const MonodromyDatum& d);

/// (0, 1, -1, 2, -2, ...) truncated to r entries; r >= 3.
std::vector<Rational> default_branch_points(std::size_t r);

/// Canonical representative of a Hurwitz class of Z/4 data
/// (1^s1, 3^s3, 2^r2) with s1 >= s3, describing a Galois double cover of
/// a genus-gprime curve that is itself a double cover of the line.
struct GaloisFamilyClass {
  int g = 0;
  int gprime = 0;
  int s1 = 0;
  int s3 = 0;
  int r2 = 0;
  MonodromyDatum representative;
};

/// All classes for (g, g'), ordered by decreasing s1. Throws EmptyLocus
/// when g < 3 g'.
std::vector<GaloisFamilyClass> enumerate_galois(int g, int gprime);

/// Table-1 shorthand of a datum, e.g. "[1^4:2^2]" (runs of equal
/// residues in order; exponent 1 omitted).
std::string shorthand(const MonodromyDatum& d);

/// Canonical grammar form "m=4;a=1^4,2^2".
std::string format_monodromy(const MonodromyDatum& d);

/// Parses `m=<int>;a=<res>^<count>[,<res>^<count>...]` or the shorthand
/// `[1^4:2^2]` (m = 4). Throws ParseError with the offending position.
/// Does not validate the datum.
MonodromyDatum parse_monodromy(std::string_view text);

} // namespace gmap
