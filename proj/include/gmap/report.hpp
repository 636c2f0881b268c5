#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmap/gaussian_maps.hpp"
#include "gmap/witness.hpp"

namespace gmap {

using Json = nlohmann::ordered_json;

/// Upper bound on rank mu_2 used for the "max rank" column:
/// min(dim I_2, 5g-5) on bielliptic data, min(dim I_2, 7g-7) otherwise.
std::size_t max_possible_rank(std::size_t i2_dim, int genus, bool bielliptic);

/// True when the lower bound provably equals the rank (it saturates
/// dim I_2 or the theoretical maximum).
bool rank_is_exact(const RankReport& r, bool bielliptic);

Json to_json(const RankReport& r);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
RankReport rank_report_from_json(const Json& j);
std::string to_text(const RankReport& r, bool bielliptic);

/// One line of the reproduced table.
struct TableRow {
  int genus = 0;
  std::string monodromy;  // shorthand, e.g. [1^4:2^2]
  std::size_t mu2_rank = 0;
  bool exact = false;
  std::size_t max_rank = 0;
  std::size_t precision = 0;
  bool stable = false;
  std::optional<std::string> error;  // per-row failure, reported inline

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow table_row(const RankReport& r, bool bielliptic);

std::string csv_header();
std::string to_csv(const TableRow& row);
/// Inverse of to_csv; throws ParseError on malformed lines.
TableRow table_row_from_csv(const std::string& line);
Json to_json(const TableRow& row);
TableRow table_row_from_json(const Json& j);

Json to_json(const GaloisFamilyClass& c);
Json to_json(const WitnessReport& w);
std::string to_text(const WitnessReport& w);

/// "0,1,-1,2" <-> branch points.
std::string format_branch_points(const std::vector<Rational>& t);
std::vector<Rational> parse_branch_points(const std::string& text);

} // namespace gmap
