#pragma once

// Reference computations for the test suites. Nothing here calls into the
// library: matrices are multiplied with explicit loops and spectra come from
// Eigen's solvers directly.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline CMat matmul(const CMat& a, const CMat& b) {
  CMat out = CMat::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline C trace(const CMat& m) {
  C t = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

inline CMat pauli(int k) {
  CMat m = CMat::Zero(2, 2);
  const C i(0.0, 1.0);
  if (k == 0) m << 1, 0, 0, 1;
  if (k == 1) m << 0, 1, 1, 0;
  if (k == 2) m << 0, -i, i, 0;
  if (k == 3) m << 1, 0, 0, -1;
  return m;
}

/// Textbook generalized Gell-Mann matrices: symmetric pairs, antisymmetric
/// pairs, diagonal, each block in lexicographic order.
inline std::vector<CMat> gell_mann(int n) {
  std::vector<CMat> sym, asym, diag;
  const C i(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMat s = CMat::Zero(n, n);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      sym.push_back(s);
      CMat a = CMat::Zero(n, n);
      a(j, k) = -i;
      a(k, j) = i;
      asym.push_back(a);
    }
  }
  for (int l = 1; l < n; ++l) {
    CMat d = CMat::Zero(n, n);
    const double s = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int m = 0; m < l; ++m) d(m, m) = s;
    d(l, l) = -l * s;
    diag.push_back(d);
  }
  std::vector<CMat> out = sym;
  out.insert(out.end(), asym.begin(), asym.end());
  out.insert(out.end(), diag.begin(), diag.end());
  return out;
}

/// Textbook SU(3) lambda_1..lambda_8 (index 0 unused).
inline std::vector<CMat> su3_textbook() {
  const C i(0.0, 1.0);
  std::vector<CMat> l(9, CMat::Zero(3, 3));
  l[1] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  l[2] << 0, -i, 0, i, 0, 0, 0, 0, 0;
  l[3] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
  l[4] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  l[5] << 0, 0, -i, 0, 0, 0, i, 0, 0;
  l[6] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  l[7] << 0, 0, 0, 0, 0, -i, 0, i, 0;
  l[8] << 1, 0, 0, 0, 1, 0, 0, 0, -2;
  l[8] /= std::sqrt(3.0);
  return l;
}

inline double f_value(const std::vector<CMat>& g, int a, int b, int c) {
  const CMat comm = matmul(g[a], g[b]) - matmul(g[b], g[a]);
  return (trace(matmul(comm, g[c])) / C(0.0, 4.0)).real();
}

inline double d_value(const std::vector<CMat>& g, int a, int b, int c) {
  const CMat anti = matmul(g[a], g[b]) + matmul(g[b], g[a]);
  return (trace(matmul(anti, g[c])) / 4.0).real();
}

/// Dense f or d with entry [(a * n + b) * n + c].
inline std::vector<double> dense_tensor(const std::vector<CMat>& g, bool symmetric) {
  const int n = static_cast<int>(g.size());
  std::vector<double> t(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        t[(static_cast<std::size_t>(a) * n + b) * n + c] =
            symmetric ? d_value(g, a, b, c) : f_value(g, a, b, c);
  return t;
}

inline RVec eigenvalues(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// e_0..e_n of the given values by expanding prod (1 + x t).
inline std::vector<double> elementary_of_values(const RVec& x) {
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index k = i + 1; k >= 1; --k) e[k] += x[i] * e[k - 1];
  return e;
}

/// Closed forms of e_1..e_6 for unit trace, written through p_2..p_6.
inline std::array<double, 6> closed_form_elementary(const std::array<double, 6>& p) {
  const double p2 = p[1], p3 = p[2], p4 = p[3], p5 = p[4], p6 = p[5];
  std::array<double, 6> e{};
  e[0] = 1.0;
  e[1] = 0.5 * (1 - p2);
  e[2] = (1.0 / 6.0) * (1 - 3 * p2 + 2 * p3);
  e[3] = (1.0 / 24.0) * (1 - 6 * p2 + 3 * p2 * p2 + 8 * p3 - 6 * p4);
  e[4] = (1.0 / 120.0) * (1 - 10 * p2 + 15 * p2 * p2 + 20 * p3 - 20 * p2 * p3 - 30 * p4 + 24 * p5);
  e[5] = (1.0 / 720.0) * (1 - 15 * p2 + 45 * p2 * p2 - 15 * p2 * p2 * p2 + 40 * p3 -
                          120 * p2 * p3 + 40 * p3 * p3 - 90 * p4 + 90 * p2 * p4 + 144 * p5 -
                          120 * p6);
  return e;
}

/// Tr rho^k for k = 1..6 from eigenvalues.
inline std::array<double, 6> power_sums_of_values(const RVec& x) {
  std::array<double, 6> p{};
  for (int k = 1; k <= 6; ++k) p[k - 1] = x.array().pow(k).sum();
  return p;
}

/// Roots of x^3 - p2 x - (2/3) q via the companion matrix, sorted by real part,
/// and the largest imaginary part seen.
struct CubicRoots {
  std::array<double, 3> re;
  double max_imag;
};

inline CubicRoots cubic_roots(double p2, double q) {
  Eigen::Matrix3d comp;
  comp << 0, 0, (2.0 / 3.0) * q,
          1, 0, p2,
          0, 1, 0;
  Eigen::EigenSolver<Eigen::Matrix3d> es(comp, false);
  CubicRoots out{};
  std::array<std::complex<double>, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = es.eigenvalues()[i];
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real(); });
  out.max_imag = 0.0;
  for (int i = 0; i < 3; ++i) {
    out.re[i] = r[i].real();
    out.max_imag = std::max(out.max_imag, std::abs(r[i].imag()));
  }
  return out;
}

/// Exact PSD range of alpha for rho = [1 + alpha sum_a lambda_a (x) lambda_a] / N^2:
/// the spectrum is (1 - 2a/N + 2a)/N^2 on symmetric and (1 - 2a/N - 2a)/N^2 on
/// antisymmetric vectors.
inline std::array<double, 2> werner_psd_window(int n) {
  return {-n / (2.0 * (n - 1)), n / (2.0 * (n + 1))};
}

/// alpha^2 = N^2/4 from Tr rho^2 = 1.
inline double werner_alpha_trace(int n) { return n / 2.0; }

/// alpha from the omega fixed-point equation.
inline double werner_alpha_omega(int n) { return -n * (n * n - 2.0) / 4.0; }

/// Transposed cofactor matrix of a 3x3 matrix.
inline RMat adjugate(const RMat& m) {
  RMat adj(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r[2], c[2];
      for (int s = 0, t = 0; s < 3; ++s) if (s != i) r[t++] = s;
      for (int s = 0, t = 0; s < 3; ++s) if (s != j) c[t++] = s;
      const double minor = m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
      adj(j, i) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * minor;
    }
  }
  return adj;
}

/// rho = [1 + x_i s_i (x) 1 + y_i 1 (x) s_i + w_ij s_i (x) s_j] / 4.
inline CMat two_qubit_rho(const RVec& x, const RVec& y, const RMat& w) {
  CMat rho = kron(pauli(0), pauli(0));
  for (int i = 0; i < 3; ++i) {
    rho += x[i] * kron(pauli(i + 1), pauli(0));
    rho += y[i] * kron(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j) rho += w(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return rho / 4.0;
}

/// Partial traces of an (n*n) x (n*n) matrix.
inline CMat trace_second(const CMat& rho, int n) {
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j) += rho(i * n + k, j * n + k);
  return out;
}

inline CMat trace_first(const CMat& rho, int n) {
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j) += rho(k * n + i, k * n + j);
  return out;
}

inline double entropy_of_values(const RVec& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] > 0.0) s -= x[i] * std::log(x[i]);
  return s;
}

/// |P|^2 and Q of a pure N-level state.
inline std::array<double, 2> pure_invariants(int n) {
  return {n * (n - 1) / 2.0, n * (n - 1) * (n - 2) / 2.0};
}

}  // namespace oracle
