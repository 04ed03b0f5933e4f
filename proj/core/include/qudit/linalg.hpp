#pragma once

#include "qudit/types.hpp"

namespace qudit {

/// Largest entrywise modulus of a matrix (0 for an empty matrix).
double max_abs(const CMatrix& m);
double max_abs(const RMatrix& m);

double hermiticity_residual(const CMatrix& m);
double unitarity_residual(const CMatrix& u);

/// Throws Error{not_hermitian} if max |m - m^dagger| exceeds tol.
void require_hermitian(const CMatrix& m, double tol, const char* what);
/// Throws Error{trace_not_one} if |Tr m - 1| exceeds tol.
void require_unit_trace(const CMatrix& m, double tol, const char* what);
/// Throws Error{not_unitary} if max |U^dagger U - 1| exceeds tol.
void require_unitary(const CMatrix& u, double tol);

/// Eigenvalues of a Hermitian matrix in ascending order.
RVector hermitian_eigenvalues(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Tr(a b) without forming the product.
Complex trace_of_product(const CMatrix& a, const CMatrix& b);

/// Partial traces of an operator on C^left (x) C^right.
CMatrix trace_out_right(const CMatrix& rho, int left, int right);
CMatrix trace_out_left(const CMatrix& rho, int left, int right);

/// Determinant and adjugate of a 3x3 real matrix by cofactor expansion.
double det3(const RMatrix& m);
RMatrix adjugate3(const RMatrix& m);

}  // namespace qudit
