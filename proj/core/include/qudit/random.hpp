#pragma once

#include <random>

#include "qudit/types.hpp"

namespace qudit {

/// All sampling in the library draws from this engine so a seed fixes every output.
using Rng = std::mt19937_64;

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal absorbed into Q.
CMatrix haar_unitary(int n, Rng& rng);

/// Haar-random unit vector in C^n.
CVector haar_state(int n, Rng& rng);

/// |psi><psi| for a Haar-random psi.
CMatrix random_pure_density(int n, Rng& rng);

/// Reduced state of a Haar-random pure state on C^n (x) C^ancilla.
/// ancilla == 1 gives a pure state; larger ancillas give full-rank mixed states.
CMatrix random_mixed_density(int n, int ancilla, Rng& rng);

/// Hermitian unit-trace matrix (1 + A)/n with A traceless Gaussian of the given
/// scale. Not necessarily positive semidefinite.
CMatrix random_hermitian_unit_trace(int n, double scale, Rng& rng);

/// Real matrix with i.i.d. standard-normal entries.
RMatrix random_gaussian_matrix(int rows, int cols, Rng& rng);

}  // namespace qudit
