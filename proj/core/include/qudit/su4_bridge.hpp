#pragma once

#include <string>
#include <vector>

#include "qudit/types.hpp"

namespace qudit::su4 {

/// sigma_left (x) sigma_right with 0 = identity, 1..3 = Pauli x, y, z.
struct PauliProduct {
  int left;
  int right;

  /// "s3⊗s1", "1⊗s2", ...
  std::string label() const;
  CMatrix matrix() const;
};

/// Single-qubit Pauli matrix (0 = identity).
CMatrix pauli(int index);

/// The 15 non-identity two-qubit Pauli products and the frozen change of basis
/// to the canonical SU(4) Gell-Mann generators.
///
/// Product order is the component order of a two-qubit state: sigma_i (x) 1
/// (i = 1..3, the x block), then 1 (x) sigma_i (the y block), then
/// sigma_i (x) sigma_j row-major (the omega block).
class PauliProductBasis {
 public:
  static const PauliProductBasis& instance();

  const std::vector<PauliProduct>& products() const noexcept { return products_; }

  /// T with lambda_a = sum_p T(a, p) * product_p, i.e. T(a, p) = Tr(lambda_a product_p) / 4.
  const RMatrix& expansion() const noexcept { return expansion_; }

 private:
  PauliProductBasis();

  std::vector<PauliProduct> products_;
  RMatrix expansion_;
};

/// One hand-entered generator identity: an explicit 4x4 generator matrix and its
/// printed Pauli-product expansion.
struct GeneratorIdentity {
  std::string name;               // e.g. "Lambda14_s"
  int canonical_index;            // index of the same matrix in gell_mann_basis(4)
  CMatrix explicit_matrix;        // left-hand side, typed entry by entry
  CMatrix expansion_matrix;       // right-hand side, built from the Pauli products
  double deviation;               // max |explicit - expansion|
  double basis_deviation;         // max |explicit - gell_mann_basis(4)[canonical_index]|
};

/// Builds both sides of all 15 SU(4) generator identities.
std::vector<GeneratorIdentity> verify_generator_identities();

/// Two-qubit components (x, y, w) -> 15-component SU(4) Bloch vector P such that
/// (1 + lambda_a P_a)/4 equals the two-qubit density matrix.
RVector components_to_ququart(const RVector& x, const RVector& y, const RMatrix& omega);

struct QubitComponents {
  RVector x;
  RVector y;
  RMatrix omega;
};

/// Inverse of components_to_ququart.
QubitComponents ququart_to_components(const RVector& bloch);

}  // namespace qudit::su4
