#include "qudit/sym_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qudit/error.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

std::vector<double> power_sums(const CMatrix& M, int K, double tol) {
  if (K < 1) throw Error(ErrorKind::invalid_argument, "power_sums needs K >= 1");
  require_hermitian(M, tol, "matrix");
  std::vector<double> p;
  p.reserve(K);
  CMatrix power = M;
  p.push_back(power.trace().real());
  for (int k = 2; k <= K; ++k) {
    power = power * M;
    p.push_back(power.trace().real());
  }
  return p;
}

std::vector<double> elementary_from_power(std::span<const double> p, int matrix_dim) {
  const int K = static_cast<int>(p.size());
  std::vector<double> e(K + 1, 0.0);  // e[0] = 1 internally
  e[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    if (matrix_dim >= 0 && k > matrix_dim) {
      e[k] = 0.0;
      continue;
    }
    double s = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      s += sign * e[k - i] * p[i - 1];
    }
    e[k] = s / k;
  }
  return std::vector<double>(e.begin() + 1, e.end());
}

SymPolyReport positivity_check(const CMatrix& rho, double tol) {
  require_hermitian(rho, kDefaultTolerance, "density matrix");
  require_unit_trace(rho, kDefaultTolerance, "density matrix");

  SymPolyReport r;
  r.dim = static_cast<int>(rho.rows());
  r.power_sums = power_sums(rho, r.dim, kDefaultTolerance);
  r.elementary = elementary_from_power(r.power_sums, r.dim);
  r.psd = std::all_of(r.elementary.begin(), r.elementary.end(),
                      [tol](double e) { return e >= -tol; });

  const RVector ev = hermitian_eigenvalues(rho);
  r.min_eigenvalue = ev.minCoeff();
  r.eigen_psd = r.min_eigenvalue >= -tol;

  // Near the boundary the smallest eigenvalue enters e_N multiplied by the
  // others, so the two verdicts may legitimately straddle the cutoff there.
  const double margin = std::sqrt(tol);
  r.consistent = (r.psd == r.eigen_psd) || std::abs(r.min_eigenvalue) <= margin;
  return r;
}

double trace_power_from_traceless(std::span<const double> trace_powers, int dim, int k,
                                  double tol) {
  if (dim < 1 || k < 0) throw Error(ErrorKind::invalid_argument, "bad dimension or power");
  if (static_cast<int>(trace_powers.size()) < k + 1) {
    throw Error(ErrorKind::invalid_argument, "need Tr A^m for m = 0..k");
  }
  if (trace_powers.size() > 1 && std::abs(trace_powers[1]) > tol) {
    std::ostringstream os;
    os << "Tr A = " << trace_powers[1] << " but A must be traceless";
    throw Error(ErrorKind::invalid_argument, os.str());
  }
  double sum = 0.0;
  double binom = 1.0;
  for (int m = 0; m <= k; ++m) {
    sum += binom * trace_powers[m];
    binom = binom * (k - m) / (m + 1);
  }
  return sum / std::pow(static_cast<double>(dim), k);
}

}  // namespace qudit
