#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mathplay {

// Stable error categories. The C API maps these one-to-one onto mp_status.
enum class ErrorCode {
  InvalidArgument,
  IllegalMove,
  Overflow,
  ParseError,
  DuplicateRule,
  MissingAxiom,
  OutputTooLarge,
  UnbalancedPop,
  InvalidSystem,
  InvalidGivens,
  EstimateUndefined,
  NotSymmetric,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mathplay
