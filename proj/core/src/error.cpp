#include "qudit/error.hpp"

namespace qudit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::not_hermitian: return "not_hermitian";
    case ErrorKind::trace_not_one: return "trace_not_one";
    case ErrorKind::not_unitary: return "not_unitary";
    case ErrorKind::broken_basis: return "broken_basis";
    case ErrorKind::unphysical_state: return "unphysical_state";
    case ErrorKind::discriminant_violation: return "discriminant_violation";
    case ErrorKind::numerical_inconsistency: return "numerical_inconsistency";
  }
  return "unknown";
}

}  // namespace qudit
