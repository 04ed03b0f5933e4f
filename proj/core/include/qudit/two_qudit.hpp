#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qudit/qudit_state.hpp"
#include "qudit/sun_basis.hpp"
#include "qudit/types.hpp"

namespace qudit {

/// Two dimension-N qudits in component form,
///   rho = [1 (x) 1 + x_i lambda_i (x) 1 + y_i 1 (x) lambda_i + w_ij lambda_i (x) lambda_j] / N^2.
/// For N = 2 the generators are the Pauli matrices in (x, y, z) order.
class BipartiteState {
 public:
  /// Throws Error{dimension_mismatch} unless x, y have N^2 - 1 entries and
  /// omega is (N^2 - 1) x (N^2 - 1).
  static BipartiteState from_components(int dim, RVector x, RVector y, RMatrix omega);

  /// x_i = (N/2) Tr(rho lambda_i (x) 1), y_i likewise, w_ij = (N^2/4) Tr(rho lambda_i (x) lambda_j).
  /// Throws Error{trace_not_one} / Error{not_hermitian} / Error{dimension_mismatch}.
  static BipartiteState from_density(const CMatrix& rho, double tol = kDefaultTolerance);

  int dim() const noexcept { return dim_; }
  const RVector& x() const noexcept { return x_; }
  const RVector& y() const noexcept { return y_; }
  const RMatrix& omega() const noexcept { return omega_; }
  const CMatrix& rho() const noexcept { return rho_; }

 private:
  BipartiteState(int dim, RVector x, RVector y, RMatrix omega, CMatrix rho)
      : dim_(dim), x_(std::move(x)), y_(std::move(y)), omega_(std::move(omega)),
        rho_(std::move(rho)) {}

  int dim_;
  RVector x_;
  RVector y_;
  RMatrix omega_;
  CMatrix rho_;
};

/// Residuals of the four conditions equivalent to rho^2 = rho.
///
/// `sum` is signed (1 + ... - N^2); the other three are the largest absolute
/// component deviation of x, y and omega from the right-hand sides of their
/// fixed-point equations, each divided by (N^2 - 2) so that N = 2 reproduces the
/// two-qubit form exactly.
struct PurityResiduals {
  double sum = 0.0;
  double x = 0.0;
  double y = 0.0;
  double omega = 0.0;

  double total() const { return std::abs(sum) + x + y + omega; }
  bool pure(double tol = kDefaultTolerance) const {
    return std::abs(sum) <= tol && x <= tol && y <= tol && omega <= tol;
  }
};

/// Two-qubit conditions: 1 + |x|^2 + |y|^2 + w:w = 4, x = w y, y = w^T x,
/// w = x y^T + Z. Throws Error{dimension_mismatch} unless N = 2.
PurityResiduals purity_residuals_qubit(const BipartiteState& state);

/// General-N conditions, built from the d and f tensors.
PurityResiduals purity_residuals_qudit(const BipartiteState& state,
                                       const StructureTensors& tensors);

/// (N^2 - 2) Tr w minus the right-hand side of the traced omega condition
/// written with z_i = d_imk w_mk. Vanishes on every pure state.
double omega_trace_residual(const BipartiteState& state, const StructureTensors& tensors);

/// Consequences of two-qubit purity.
struct QubitIdentityReport {
  double det_omega = 0.0;
  double x_norm2 = 0.0;
  double y_norm2 = 0.0;
  double trace_residual = 0.0;        // Tr w - [x.y - ((Tr w)^2 - Tr w^2)/2]
  double equal_norm_residual = 0.0;   // |x|^2 - |y|^2
  double gram_trace_residual = 0.0;   // Tr(w w^T) - (|x|^2 - 3 det w)
  double det_link_residual = 0.0;     // |x|^2 - (1 + det w)
  bool holds(double tol) const;
};

/// Throws Error{dimension_mismatch} unless N = 2 and Error{invalid_argument}
/// when the state is not pure within tol.
QubitIdentityReport derived_qubit_identities(const BipartiteState& state,
                                             double tol = kDefaultTolerance);

/// Z_ij = -delta_ij ((Tr w)^2 - Tr w^2)/2 + w_ji Tr w - (w^2)_ji, with -Z^T = adj(w).
struct ZMatrix {
  RMatrix Z;
  double det_omega = 0.0;
  double adjugate_residual = 0.0;  // max |w Z^T + det(w) 1|
  bool entangled = false;          // Z != 0 beyond tolerance
};

/// Throws Error{dimension_mismatch} unless N = 2.
ZMatrix z_matrix(const BipartiteState& state, double tol = kDefaultTolerance);
/// Z for an arbitrary real 3x3 matrix.
RMatrix z_of(const RMatrix& omega);

/// The three necessary two-qubit positivity inequalities, expressed as values
/// that must be non-negative:
///   [0] 3 - S                               (= 8 e2)
///   [1] 1 + 2(x.w.y - det w) - S            (= 16 e3)
///   [2] quartic combination including Z    (= 256 e4)
/// with S = |x|^2 + |y|^2 + w:w.
struct MixedPositivityReport {
  std::array<double, 3> values{};
  std::array<bool, 3> satisfied{};
  std::array<bool, 3> equality{};
  bool all_satisfied = false;
  bool eigen_psd = false;
  double min_eigenvalue = 0.0;
  /// Largest deviation of the three values from 8 e2, 16 e3, 256 e4 of rho.
  double reconciliation_residual = 0.0;
};

/// Throws Error{dimension_mismatch} unless N = 2.
MixedPositivityReport mixed_positivity_qubit(const BipartiteState& state,
                                             double tol = kPositivityTolerance);

/// (Tr_2 rho, Tr_1 rho) as single-qudit states; their Bloch vectors equal x and y.
std::pair<QuditState, QuditState> reduced_states(const BipartiteState& state,
                                                 double tol = kDefaultTolerance);

/// x = y = 0, w = alpha * 1. alpha = -1 at N = 2 is the singlet. Any real alpha
/// is accepted; physicality is for the caller to check.
BipartiteState werner(int dim, double alpha);

/// max |(U (x) U) rho (U (x) U)^dagger - rho|.
double local_unitary_deviation(const BipartiteState& state, const CMatrix& U);

struct WernerConsistency {
  int dim = 0;
  double alpha_sum_magnitude = 0.0;         // |alpha| from the trace condition, N/2
  double alpha_sum_magnitude_tensor = 0.0;  // same, evaluated from the tensors
  double alpha_omega = 0.0;                 // alpha from the omega condition, -N(N^2-2)/4
  double alpha_omega_tensor = 0.0;          // same, from sum_i (dd - ff)_ii
  bool consistent = false;                  // alpha_omega = +- alpha_sum
  double min_residual = 0.0;                // min over alpha of the total purity residual
  double argmin_alpha = 0.0;
};

/// Both determinations of a pure Werner state's alpha, and a scan of the total
/// purity residual over alpha in [-N, N] (uniform grid plus golden-section refinement).
WernerConsistency werner_consistency(int dim, const StructureTensors& tensors,
                                     double tol = kDefaultTolerance, int grid_points = 10001);

/// Total purity residual of werner(N, alpha) as a function of alpha. Built once
/// from the tensors; evaluates the same quantity as
/// purity_residuals_qudit(werner(N, alpha), tensors).total() in O(n^2).
class WernerResidualModel {
 public:
  explicit WernerResidualModel(const StructureTensors& tensors);
  PurityResiduals residuals(double alpha) const;
  double operator()(double alpha) const { return residuals(alpha).total(); }

 private:
  int dim_;
  int n_;
  RMatrix c_identity_;  // C_ij evaluated at w = 1
  RVector x_coeff_;     // d_mki delta_mk, which multiplies alpha^2 in the x condition
};

struct WernerScanRow {
  int dim = 0;
  double alpha = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double e3_condition = 0.0;  // (N^2-2) - 12(N^2-2)(a/N)^2 - 32 (a/N)^3
  double min_eigenvalue = 0.0;
  bool e2_ok = false;
  bool e3_ok = false;
  bool psd = false;
  double purity_residual = 0.0;
};

/// e2 / e3 / full-eigenvalue verdicts for `steps` evenly spaced alpha values.
/// Throws Error{invalid_argument} for steps < 2 or alpha_max < alpha_min.
std::vector<WernerScanRow> werner_positivity_scan(int dim, double alpha_min, double alpha_max,
                                                  int steps, const StructureTensors& tensors,
                                                  double tol = kPositivityTolerance);

/// [lo, hi] of the alpha values in a scan that pass a verdict; nullopt-like
/// (lo > hi) when none pass.
struct AlphaWindow {
  double lo;
  double hi;
  bool empty() const { return lo > hi; }
};
AlphaWindow e2_window(const std::vector<WernerScanRow>& rows);
AlphaWindow psd_window(const std::vector<WernerScanRow>& rows);

}  // namespace qudit
