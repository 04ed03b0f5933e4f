#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qudit {

enum class ErrorKind {
  invalid_argument,
  dimension_mismatch,
  not_hermitian,
  trace_not_one,
  not_unitary,
  broken_basis,
  unphysical_state,
  discriminant_violation,
  numerical_inconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception type for every failure the library reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qudit
