#include "qudit/random.hpp"

#include <cmath>

#include "qudit/error.hpp"

namespace qudit {

namespace {

CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be positive");
}

}  // namespace

CMatrix haar_unitary(int n, Rng& rng) {
  require_positive(n, "unitary dimension");
  const CMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

CVector haar_state(int n, Rng& rng) {
  require_positive(n, "state dimension");
  CVector v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

CMatrix random_pure_density(int n, Rng& rng) {
  const CVector psi = haar_state(n, rng);
  return psi * psi.adjoint();
}

CMatrix random_mixed_density(int n, int ancilla, Rng& rng) {
  require_positive(ancilla, "ancilla dimension");
  // Columns of a Ginibre n x ancilla block are the unnormalised Schmidt vectors.
  const CMatrix g = ginibre(n, ancilla, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

CMatrix random_hermitian_unit_trace(int n, double scale, Rng& rng) {
  require_positive(n, "matrix dimension");
  const CMatrix g = ginibre(n, n, rng);
  CMatrix a = 0.5 * (g + g.adjoint());
  a -= (a.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
  CMatrix rho = (CMatrix::Identity(n, n) + scale * a) / static_cast<double>(n);
  // hermitise exactly so downstream checks see no roundoff asymmetry
  return 0.5 * (rho + rho.adjoint());
}

RMatrix random_gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

}  // namespace qudit
