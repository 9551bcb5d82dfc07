#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

enum class ErrorCode {
  invalid_argument,
  not_prime,
  budget_exceeded,
  dimension_mismatch,
  parse_error,
  internal,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto fermat_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fermat
