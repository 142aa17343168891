#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace goncurve {

enum class ErrorCode {
  zero_point,
  degenerate_input,
  base_point,
  degenerate_pencil,
  exhausted_retries,
  singular_system,
  bad_shape,
  rank_mismatch,
  invalid_curve,
  invalid_argument,
  parse_error,
  solver_budget_exceeded,
  too_large,
  bad_genus,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace goncurve
