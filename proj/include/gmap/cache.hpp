#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gmap/gaussian_maps.hpp"

namespace gmap {

/// Append-only store of rank results, one JSON record per line.
///
/// Records are keyed on (m, a, branch points, precision policy). Lookups
/// return the first matching record, so later appends never shadow a value
/// that was already stored. Lines that fail to parse are skipped with a
/// warning on stderr.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path path);

  /// Path from the GMAP_CACHE environment variable, if set and non-empty.
  static std::optional<std::filesystem::path> path_from_environment();

  const std::filesystem::path& path() const noexcept { return path_; }

  std::optional<RankReport> lookup(const MonodromyDatum& d, const std::vector<Rational>& t,
                                   const std::string& policy) const;

  /// Appends one record under an exclusive file lock.
  void append(const RankReport& report);

  /// Number of lines skipped as corrupt by the most recent lookup.
  std::size_t skipped_lines() const noexcept { return skipped_; }

private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  mutable std::size_t skipped_ = 0;
};

} // namespace gmap
