#include "qudit/linalg.hpp"

#include <cmath>
#include <sstream>

#include "qudit/error.hpp"

namespace qudit {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const RMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::dimension_mismatch, "matrix is not square");
  }
  return max_abs(CMatrix(m - m.adjoint()));
}

double unitarity_residual(const CMatrix& u) {
  if (u.rows() != u.cols()) {
    throw Error(ErrorKind::dimension_mismatch, "matrix is not square");
  }
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return max_abs(CMatrix(u.adjoint() * u - id));
}

void require_hermitian(const CMatrix& m, double tol, const char* what) {
  const double r = hermiticity_residual(m);
  if (r > tol) {
    std::ostringstream os;
    os << what << " is not Hermitian (residual " << r << ")";
    throw Error(ErrorKind::not_hermitian, os.str());
  }
}

void require_unit_trace(const CMatrix& m, double tol, const char* what) {
  const Complex t = m.trace();
  if (std::abs(t - Complex(1.0, 0.0)) > tol) {
    std::ostringstream os;
    os << what << " has trace " << t.real() << " (expected 1)";
    throw Error(ErrorKind::trace_not_one, os.str());
  }
}

void require_unitary(const CMatrix& u, double tol) {
  const double r = unitarity_residual(u);
  if (r > tol) {
    std::ostringstream os;
    os << "matrix is not unitary (residual " << r << ")";
    throw Error(ErrorKind::not_unitary, os.str());
  }
}

RVector hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numerical_inconsistency, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Complex trace_of_product(const CMatrix& a, const CMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

CMatrix trace_out_right(const CMatrix& rho, int left, int right) {
  if (rho.rows() != left * right || rho.cols() != left * right) {
    throw Error(ErrorKind::dimension_mismatch, "partial trace: size mismatch");
  }
  CMatrix out = CMatrix::Zero(left, left);
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < left; ++j) {
      for (int k = 0; k < right; ++k) {
        out(i, j) += rho(i * right + k, j * right + k);
      }
    }
  }
  return out;
}

CMatrix trace_out_left(const CMatrix& rho, int left, int right) {
  if (rho.rows() != left * right || rho.cols() != left * right) {
    throw Error(ErrorKind::dimension_mismatch, "partial trace: size mismatch");
  }
  CMatrix out = CMatrix::Zero(right, right);
  for (int i = 0; i < right; ++i) {
    for (int j = 0; j < right; ++j) {
      for (int k = 0; k < left; ++k) {
        out(i, j) += rho(k * right + i, k * right + j);
      }
    }
  }
  return out;
}

double det3(const RMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

RMatrix adjugate3(const RMatrix& m) {
  RMatrix cof(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cyclic minors carry the checkerboard sign already
      cof(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return cof.transpose();
}

}  // namespace qudit
