#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmap {

enum class ErrorCode {
  ZeroConstantTerm,
  NonIntegralGenus,
  InvalidDatum,
  EmptyLocus,
  NoTotallyRamifiedPoint,
  RepeatedBranchPoints,
  NotNormalized,
  PrecisionTooLow,
  SubspaceTooSmall,
  NotAQuadric,
  DegenerateWitness,
  ParseError,
  ResourceCapExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying the module that raised it, so the CLI can
/// report "cover-model: RepeatedBranchPoints: ..." without guessing.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

private:
  ErrorCode code_;
  std::string module_;
};

/// Parse failure with a 0-based character offset into the input.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError, "monodromy",
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace gmap
