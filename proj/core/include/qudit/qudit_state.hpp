#pragma once

#include "qudit/sun_basis.hpp"
#include "qudit/sym_poly.hpp"
#include "qudit/types.hpp"

namespace qudit {

/// A single dimension-N qudit, rho = (1 + lambda_a P_a) / N.
///
/// The Bloch vector is stored unscaled, so pure states have |P|^2 = N(N-1)/2.
/// Unphysical vectors are representable; operations that need a positive
/// semidefinite rho refuse them explicitly.
class QuditState {
 public:
  /// Throws Error{invalid_argument} for dim < 2 and Error{dimension_mismatch}
  /// when bloch does not have N^2 - 1 entries.
  static QuditState from_bloch(int dim, RVector bloch);

  /// Projects a Hermitian unit-trace matrix onto the Gell-Mann basis.
  static QuditState from_density(const CMatrix& rho, double tol = kDefaultTolerance);

  int dim() const noexcept { return dim_; }
  const RVector& bloch() const noexcept { return bloch_; }
  const CMatrix& rho() const noexcept { return rho_; }

 private:
  QuditState(int dim, RVector bloch, CMatrix rho)
      : dim_(dim), bloch_(std::move(bloch)), rho_(std::move(rho)) {}

  int dim_;
  RVector bloch_;
  CMatrix rho_;
};

/// P_a = (N/2) Tr(rho lambda_a). Throws Error{trace_not_one} / Error{not_hermitian}.
RVector to_bloch(const CMatrix& rho, const GellMannBasis& basis, double tol = kDefaultTolerance);

/// SU(N) invariants of a Bloch vector.
struct InvariantSet {
  double p2 = 0.0;       // |P|^2
  double cubic = 0.0;    // Q = d_abc P_a P_b P_c
  double quartic = 0.0;  // d_abc d_aef P_b P_c P_e P_f = q.q
  RVector q;             // q_a = d_abc P_b P_c
};

InvariantSet invariants(const QuditState& state, const StructureTensors& tensors);

/// e_2, e_3, e_4 of rho's eigenvalues expressed through |P|^2, Q and q.q.
struct LowOrderElementary {
  double e2;
  double e3;
  double e4;
};
LowOrderElementary elementary_from_invariants(int dim, const InvariantSet& inv);

/// Signed norm residual |P|^2 - N(N-1)/2 and the largest component residual of
/// (1 - 2/N) P_a = (1/N) d_bca P_b P_c. Both vanish exactly when rho^2 = rho.
struct BlochPurityResiduals {
  double norm;
  double vec;
  bool pure(double tol = kDefaultTolerance) const {
    return std::abs(norm) <= tol && vec <= tol;
  }
};
BlochPurityResiduals purity_residuals(const QuditState& state, const StructureTensors& tensors);

/// Full e_k / eigenvalue positivity report for the state's rho.
SymPolyReport physicality(const QuditState& state, double tol = kPositivityTolerance);
bool is_physical(const QuditState& state, double tol = kPositivityTolerance);

/// -Tr rho ln rho in nats for a positive semidefinite matrix; eigenvalues in
/// (-tol, 0) count as zero. Throws Error{unphysical_state} otherwise.
double von_neumann_entropy(const CMatrix& rho, double tol = kPositivityTolerance);
double entropy(const QuditState& state, double tol = kPositivityTolerance);

/// rho -> U rho U^dagger, re-expanded in the Gell-Mann basis.
/// Throws Error{not_unitary} / Error{dimension_mismatch}.
QuditState transform(const QuditState& state, const CMatrix& U, double tol = kDefaultTolerance);

}  // namespace qudit
