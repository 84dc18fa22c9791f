#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylgk {

enum class ErrorCode {
  InvalidArgument,
  RankMismatch,
  NotInGroup,
  DuplicateLabel,
  MalformedTableau,
  SymbolSplit,
  NotHcWeight,
  GuardViolation,
  OutOfRange,
  Unsupported,
  Internal,
};

/// Stable machine-readable name, used verbatim in CLI error output.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weylgk
