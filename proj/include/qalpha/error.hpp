#pragma once

#include <stdexcept>
#include <string>

namespace qalpha {

enum class ErrorCode {
  SpecMismatch,
  DivisionByZero,
  InvalidParameter,
  UndefinedDlog,
  Unsupported,
  UnsupportedScale,
  InvalidInput,
  ReducibleModulus,
  DegreeMismatch,
  NonMonic,
  NotSelfReciprocal,
  Reducible,
  InternalContract,
  InvalidSeed,
  TheoremViolation,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the python module) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qalpha
