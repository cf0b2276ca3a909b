#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opmeans {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  DomainError,
  Singular,
  DimensionMismatch,
  NotPositiveDefinite,
  TriangleEqualityFails,
  InvalidSpec,
  InvalidTolerance,
  Precondition,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opmeans
