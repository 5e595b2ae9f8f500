#pragma once

#include <stdexcept>
#include <string>

namespace contact1d {

enum class ErrorCode {
  invalid_argument,
  not_unimodular,
  non_increasing_positions,
  duality_precondition,
  numerical_failure,
};

/// Raised by every validating entry point of the library. The code lets
/// callers (the CLI, tests) tell precondition classes apart without
/// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::invalid_argument, what);
}

}  // namespace detail
}  // namespace contact1d
