#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace qudit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Absolute tolerance on matrix-norm residuals unless a caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

/// Eigenvalues and elementary symmetric polynomials at or above -kPositivityTolerance
/// count as non-negative.
inline constexpr double kPositivityTolerance = 1e-9;

/// Structure-tensor entries with magnitude at or below this are not stored.
inline constexpr double kSparseCutoff = 1e-12;

}  // namespace qudit
