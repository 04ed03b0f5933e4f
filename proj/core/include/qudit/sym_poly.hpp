#pragma once

#include <span>
#include <vector>

#include "qudit/types.hpp"

namespace qudit {

/// p_k = Tr M^k for k = 1..K by repeated multiplication; element [k-1] holds p_k.
/// Throws Error{not_hermitian} for non-Hermitian input, Error{invalid_argument} for K < 1.
std::vector<double> power_sums(const CMatrix& M, int K, double tol = kDefaultTolerance);

/// Elementary symmetric polynomials e_1..e_K from power sums p_1..p_K (p[k-1] = p_k)
/// via Newton's identities k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
///
/// When matrix_dim is given, e_k for k > matrix_dim is set to exactly zero instead
/// of being computed.
std::vector<double> elementary_from_power(std::span<const double> p, int matrix_dim = -1);

struct SymPolyReport {
  int dim = 0;
  std::vector<double> power_sums;  // p_1..p_dim
  std::vector<double> elementary;  // e_1..e_dim
  bool psd = false;                // every e_k >= -tol
  bool eigen_psd = false;          // smallest eigenvalue >= -tol
  double min_eigenvalue = 0.0;
  /// False only when the two verdicts disagree on a matrix whose smallest
  /// eigenvalue is clearly away from the PSD boundary (numerical breakdown).
  bool consistent = true;
};

/// Positive-semidefiniteness of a Hermitian unit-trace matrix from the signs of
/// its elementary symmetric polynomials, cross-checked by an eigenvalue verdict.
/// Throws Error{not_hermitian} / Error{trace_not_one}.
SymPolyReport positivity_check(const CMatrix& rho, double tol = kPositivityTolerance);

/// Tr rho^k for rho = (1 + A)/N from Tr A^m, m = 0..k (trace_powers[m] = Tr A^m;
/// trace_powers[0] = N). Throws Error{invalid_argument} unless |Tr A| <= tol.
double trace_power_from_traceless(std::span<const double> trace_powers, int dim, int k,
                                  double tol = kDefaultTolerance);

}  // namespace qudit
