#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qudit/types.hpp"

namespace qudit::qutrit {

/// Roots of x^3 - |P|^2 x - (2/3) Q = 0, the characteristic polynomial of
/// A = lambda_a P_a for a single qutrit (rho = (1 + A)/3).
struct Spectrum {
  std::array<double, 3> roots{};  // x_1 <= x_2 <= x_3
  double chi = 0.0;               // arccos(sqrt(3) Q / |P|^3), in [0, pi]
  bool degenerate = false;        // |P| = 0: triple root 0, chi reported as 0

  std::array<double, 3> rho_eigenvalues() const {
    return {(1 + roots[0]) / 3, (1 + roots[1]) / 3, (1 + roots[2]) / 3};
  }
};

/// Trigonometric closed form. cos(chi) within tol outside [-1, 1] is clamped;
/// beyond that the roots are complex and Error{discriminant_violation} is thrown.
/// Throws Error{invalid_argument} for p2 < 0.
Spectrum spectrum(double p2, double cubic, double tol = kDefaultTolerance);

enum FailBit : unsigned {
  kNormBound = 1u << 0,        // |P|^2 <= 3
  kCondition1 = 1u << 1,       // (2/3) Q >= |P|^2 - 1
  kDiscriminant = 1u << 2,     // 3 Q^2 <= |P|^6
  kEigenPositivity = 1u << 3,  // min (1 + x_i) >= -tol
};

struct Admissibility {
  bool admissible = false;
  unsigned fail_mask = 0;
  std::vector<std::string> failed_conditions() const;
};

/// Whether some qutrit density matrix has invariants (|P|^2, Q): the conjunction
/// of the norm bound, the e_3 condition, real roots, and positive eigenvalues.
Admissibility admissible(double p2, double cubic, double tol = kDefaultTolerance);

/// Verdicts on a uniform grid |P| in [0, sqrt 3] x Q in [-3, 3], both endpoints
/// included. Cell (i, j) has |P| = abs_p[i] and Q = cubic[j].
struct RegionGrid {
  int resolution = 0;
  std::vector<double> abs_p;
  std::vector<double> cubic;
  std::vector<std::uint8_t> admissible;
  std::vector<unsigned> fail_mask;
  /// Positivity of diag((1 + x_i)/3) decided by the e_k test; only meaningful
  /// where the roots are real (false otherwise).
  std::vector<std::uint8_t> realized_psd;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * resolution + j; }
};

/// Throws Error{invalid_argument} for resolution < 2.
RegionGrid region_scan(int resolution, double tol = kDefaultTolerance);

struct BoundarySample {
  std::string curve;  // condition1 | discriminant_upper | discriminant_lower | norm_bound
  double abs_p;
  double cubic;
};

/// Analytic boundary curves, `samples` points each, restricted to Q in [-3, 3].
std::vector<BoundarySample> boundary_curves(int samples);

}  // namespace qudit::qutrit
