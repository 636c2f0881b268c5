#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "gmap/gaussian_maps.hpp"

namespace gmap {

enum class OutputFormat { text, json, csv };

struct Limits {
  int max_genus = 30;
  std::size_t max_precision = 600;
};

struct CommandOptions {
  std::optional<std::size_t> precision;
  std::optional<std::string> escalate;       // "start:factor:max"
  std::optional<std::string> branch_points;  // "0,1,-1,..."
  int gprime = 1;
  std::size_t class_index = 0;  // 0-based position in enumerate_galois
  OutputFormat format = OutputFormat::text;
  std::optional<std::filesystem::path> cache;
  Limits limits;
  kernels::Execution execution = kernels::Execution::parallel;
};

/// Everything a command produced. Commands never write to the process
/// streams themselves, which keeps them testable.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
} // namespace exit_code

/// "150:2:600" -> escalate(150, 2, 600). Throws ParseError.
PrecisionPolicy parse_escalate(const std::string& text);

/// "5..8" (or a single genus "7") -> {5, 8}. Throws ParseError.
std::pair<int, int> parse_genus_range(const std::string& text);

/// True for Z/4 data whose quotient by the involution is elliptic.
bool is_bielliptic_datum(const MonodromyDatum& d);

CommandResult cmd_rank(const std::string& monodromy, const CommandOptions& opt);
CommandResult cmd_table(const std::string& range, const CommandOptions& opt);
CommandResult cmd_enumerate(int g, int gprime, const CommandOptions& opt);
CommandResult cmd_witness(int g, int gprime, const CommandOptions& opt);
CommandResult cmd_validate(const std::string& monodromy, const CommandOptions& opt);

} // namespace gmap
