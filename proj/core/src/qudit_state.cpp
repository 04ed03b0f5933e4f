#include "qudit/qudit_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qudit/error.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

QuditState QuditState::from_bloch(int dim, RVector bloch) {
  if (dim < 2) throw Error(ErrorKind::invalid_argument, "qudit dimension must be >= 2");
  if (bloch.size() != dim * dim - 1) {
    std::ostringstream os;
    os << "Bloch vector for N = " << dim << " needs " << dim * dim - 1 << " entries, got "
       << bloch.size();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
  const GellMannBasis& basis = gell_mann_basis(dim);
  CMatrix rho = (CMatrix::Identity(dim, dim) + basis.combine(bloch)) / static_cast<double>(dim);
  return QuditState(dim, std::move(bloch), std::move(rho));
}

QuditState QuditState::from_density(const CMatrix& rho, double tol) {
  const int dim = static_cast<int>(rho.rows());
  if (dim < 2 || rho.cols() != dim) {
    throw Error(ErrorKind::dimension_mismatch, "density matrix must be square with N >= 2");
  }
  return from_bloch(dim, to_bloch(rho, gell_mann_basis(dim), tol));
}

RVector to_bloch(const CMatrix& rho, const GellMannBasis& basis, double tol) {
  if (rho.rows() != basis.dim() || rho.cols() != basis.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "density matrix does not match the basis");
  }
  require_hermitian(rho, tol, "density matrix");
  require_unit_trace(rho, tol, "density matrix");
  RVector p(basis.size());
  const double half_n = 0.5 * basis.dim();
  for (int a = 0; a < basis.size(); ++a) {
    p[a] = half_n * trace_of_product(rho, basis[a]).real();
  }
  return p;
}

InvariantSet invariants(const QuditState& state, const StructureTensors& tensors) {
  if (tensors.dim() != state.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "tensors do not match the state dimension");
  }
  const RVector& p = state.bloch();
  InvariantSet inv;
  inv.p2 = p.squaredNorm();
  inv.q = tensors.contract_d(p, p);
  inv.cubic = inv.q.dot(p);
  inv.quartic = inv.q.squaredNorm();
  return inv;
}

LowOrderElementary elementary_from_invariants(int dim, const InvariantSet& inv) {
  const double n = dim;
  const double n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  const double p2 = inv.p2, q = inv.cubic, p4 = p2 * p2;
  LowOrderElementary e{};
  e.e2 = (n - 1) / (2 * n) - p2 / n2;
  e.e3 = (n - 1) * (n - 2) / (6 * n2) - (n - 2) / n3 * p2 + 2.0 / (3 * n3) * q;
  e.e4 = (n - 1) * (n - 2) * (n - 3) / (24 * n3) - (n - 2) * (n - 3) / (2 * n4) * p2 +
         2 * (n - 3) / (3 * n4) * q + p4 / (2 * n4) - (2.0 / n * p4 + inv.quartic) / (2 * n4);
  return e;
}

BlochPurityResiduals purity_residuals(const QuditState& state, const StructureTensors& tensors) {
  if (tensors.dim() != state.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "tensors do not match the state dimension");
  }
  const double n = state.dim();
  const RVector& p = state.bloch();
  const RVector q = tensors.contract_d(p, p);
  const RVector component = (1.0 - 2.0 / n) * p - q / n;
  return {p.squaredNorm() - n * (n - 1) / 2.0, component.size() ? component.cwiseAbs().maxCoeff() : 0.0};
}

SymPolyReport physicality(const QuditState& state, double tol) {
  return positivity_check(state.rho(), tol);
}

bool is_physical(const QuditState& state, double tol) {
  return hermitian_eigenvalues(state.rho()).minCoeff() >= -tol;
}

double von_neumann_entropy(const CMatrix& rho, double tol) {
  require_hermitian(rho, kDefaultTolerance, "density matrix");
  const RVector ev = hermitian_eigenvalues(rho);
  if (ev.minCoeff() < -tol) {
    std::ostringstream os;
    os << "entropy needs a positive semidefinite state (smallest eigenvalue " << ev.minCoeff()
       << ")";
    throw Error(ErrorKind::unphysical_state, os.str());
  }
  double s = 0.0;
  for (double x : ev) {
    const double v = std::clamp(x, 0.0, 1.0);
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

double entropy(const QuditState& state, double tol) { return von_neumann_entropy(state.rho(), tol); }

QuditState transform(const QuditState& state, const CMatrix& U, double tol) {
  if (U.rows() != state.dim() || U.cols() != state.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "unitary does not match the state dimension");
  }
  require_unitary(U, tol);
  const CMatrix rotated = U * state.rho() * U.adjoint();
  return QuditState::from_bloch(state.dim(), to_bloch(rotated, gell_mann_basis(state.dim()), tol));
}

}  // namespace qudit
