#include "qudit/two_qudit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qudit/error.hpp"
#include "qudit/linalg.hpp"
#include "qudit/sym_poly.hpp"

namespace qudit {

namespace {

double max_abs_vec(const RVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

void require_qubits(const BipartiteState& state) {
  if (state.dim() != 2) {
    throw Error(ErrorKind::dimension_mismatch, "operation is defined for two qubits only");
  }
}

void require_tensors(const BipartiteState& state, const StructureTensors& tensors) {
  if (tensors.dim() != state.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "tensors do not match the state dimension");
  }
}

// D(v)_{ab} = d_abc v_c (symmetric).
RMatrix d_times(const StructureTensors& t, const RVector& v) {
  RMatrix m = RMatrix::Zero(t.size(), t.size());
  for (const auto& e : t.d_entries()) m(e.a, e.b) += e.value * v[e.c];
  return m;
}

// out_i = T_mki M_mk for a sparse rank-3 tensor T.
RVector contract_last(std::span<const TensorEntry> entries, const RMatrix& m, int n) {
  RVector out = RVector::Zero(n);
  for (const auto& e : entries) out[e.c] += e.value * m(e.a, e.b);
  return out;
}

// C_ij = w_mn w_kl (d_mki d_nlj - f_mki f_nlj).
RMatrix c_matrix(const StructureTensors& t, const RMatrix& w) {
  const int n = t.size();
  std::vector<RMatrix> d_slices(n, RMatrix::Zero(n, n)), f_slices(n, RMatrix::Zero(n, n));
  for (const auto& e : t.d_entries()) d_slices[e.c](e.a, e.b) = e.value;
  for (const auto& e : t.f_entries()) f_slices[e.c](e.a, e.b) = e.value;
  RMatrix c = RMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    // G_j[m,k] = w_mn T_nlj w_kl = (w T_j w^T)_mk
    const RMatrix gd = w * d_slices[j] * w.transpose();
    const RMatrix gf = w * f_slices[j] * w.transpose();
    for (const auto& e : t.d_entries()) c(e.c, j) += e.value * gd(e.a, e.b);
    for (const auto& e : t.f_entries()) c(e.c, j) -= e.value * gf(e.a, e.b);
  }
  return c;
}

}  // namespace

BipartiteState BipartiteState::from_components(int dim, RVector x, RVector y, RMatrix omega) {
  if (dim < 2) throw Error(ErrorKind::invalid_argument, "qudit dimension must be >= 2");
  const int n = dim * dim - 1;
  if (x.size() != n || y.size() != n || omega.rows() != n || omega.cols() != n) {
    std::ostringstream os;
    os << "components for N = " << dim << " need vectors of length " << n << " and an " << n
       << "x" << n << " matrix";
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
  const GellMannBasis& basis = gell_mann_basis(dim);
  const CMatrix id = CMatrix::Identity(dim, dim);
  CMatrix rho = kron(id, id) + kron(basis.combine(x), id) + kron(id, basis.combine(y));
  for (int i = 0; i < n; ++i) {
    const RVector row = omega.row(i).transpose();
    if (row.isZero(0.0)) continue;
    rho += kron(basis[i], basis.combine(row));
  }
  rho /= static_cast<double>(dim * dim);
  return BipartiteState(dim, std::move(x), std::move(y), std::move(omega), std::move(rho));
}

BipartiteState BipartiteState::from_density(const CMatrix& rho, double tol) {
  const int full = static_cast<int>(rho.rows());
  const int dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(full))));
  if (rho.cols() != full || dim * dim != full || dim < 2) {
    throw Error(ErrorKind::dimension_mismatch, "bipartite density matrix must be N^2 x N^2");
  }
  require_hermitian(rho, tol, "density matrix");
  require_unit_trace(rho, tol, "density matrix");
  const GellMannBasis& basis = gell_mann_basis(dim);
  const int n = basis.size();

  RVector x = to_bloch(trace_out_right(rho, dim, dim), basis, tol);
  RVector y = to_bloch(trace_out_left(rho, dim, dim), basis, tol);

  RMatrix omega(n, n);
  const double scale = dim * dim / 4.0;
  for (int i = 0; i < n; ++i) {
    // M_i = Tr_1[rho (lambda_i (x) 1)]
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (int d = 0; d < dim; ++d) {
        Complex s = 0.0;
        for (int a = 0; a < dim; ++a)
          for (int e = 0; e < dim; ++e) s += rho(a * dim + c, e * dim + d) * basis[i](e, a);
        m(c, d) = s;
      }
    for (int j = 0; j < n; ++j) omega(i, j) = scale * trace_of_product(m, basis[j]).real();
  }
  return from_components(dim, std::move(x), std::move(y), std::move(omega));
}

RMatrix z_of(const RMatrix& w) {
  const double tr = w.trace();
  const RMatrix w2 = w * w;
  const double e2 = 0.5 * (tr * tr - w2.trace());
  return -e2 * RMatrix::Identity(3, 3) + tr * w.transpose() - w2.transpose();
}

PurityResiduals purity_residuals_qubit(const BipartiteState& s) {
  require_qubits(s);
  const RMatrix& w = s.omega();
  PurityResiduals r;
  r.sum = 1.0 + s.x().squaredNorm() + s.y().squaredNorm() + w.squaredNorm() - 4.0;
  r.x = max_abs_vec(s.x() - w * s.y());
  r.y = max_abs_vec(s.y() - w.transpose() * s.x());
  r.omega = max_abs(RMatrix(w - s.x() * s.y().transpose() - z_of(w)));
  return r;
}

PurityResiduals purity_residuals_qudit(const BipartiteState& s, const StructureTensors& t) {
  require_tensors(s, t);
  const double dim = s.dim();
  const double k = dim * dim - 2.0;
  const int n = t.size();
  const RVector& x = s.x();
  const RVector& y = s.y();
  const RMatrix& w = s.omega();

  PurityResiduals r;
  r.sum = 1.0 + 2.0 / dim * (x.squaredNorm() + y.squaredNorm()) +
          4.0 / (dim * dim) * w.squaredNorm() - dim * dim;

  const RVector rhs_x = t.contract_d(x, x) + 4.0 / dim * (w * y) +
                        2.0 / dim * contract_last(t.d_entries(), w * w.transpose(), n);
  const RVector rhs_y = t.contract_d(y, y) + 4.0 / dim * (w.transpose() * x) +
                        2.0 / dim * contract_last(t.d_entries(), w.transpose() * w, n);
  r.x = max_abs_vec(x - rhs_x / k);
  r.y = max_abs_vec(y - rhs_y / k);

  const RMatrix rhs_w = 2.0 * x * y.transpose() + 2.0 * d_times(t, x) * w +
                        2.0 * w * d_times(t, y) + c_matrix(t, w);
  r.omega = max_abs(RMatrix(w - rhs_w / k));
  return r;
}

double omega_trace_residual(const BipartiteState& s, const StructureTensors& t) {
  require_tensors(s, t);
  const double dim = s.dim();
  const int n = t.size();
  const RMatrix& w = s.omega();
  const RVector z = contract_last(t.d_entries(), w, n);
  const RMatrix sym = w + w.transpose();

  std::vector<RMatrix> slices(n, RMatrix::Zero(n, n));
  for (const auto& e : t.d_entries()) slices[e.a](e.b, e.c) = e.value;  // D_i[m,k] = d_imk
  double quad = 0.0;
  for (int i = 0; i < n; ++i) {
    quad += slices[i].cwiseProduct(sym * slices[i] * sym).sum();
  }
  const double tr = w.trace();
  const double rhs = 2.0 * s.x().dot(s.y()) + 2.0 * (s.x() + s.y()).dot(z) + 0.5 * quad -
                     2.0 / dim * (tr * tr - (w * w).trace()) - z.squaredNorm();
  return (dim * dim - 2.0) * tr - rhs;
}

bool QubitIdentityReport::holds(double tol) const {
  return std::abs(trace_residual) <= tol && std::abs(equal_norm_residual) <= tol &&
         std::abs(gram_trace_residual) <= tol && std::abs(det_link_residual) <= tol;
}

QubitIdentityReport derived_qubit_identities(const BipartiteState& s, double tol) {
  require_qubits(s);
  const PurityResiduals pr = purity_residuals_qubit(s);
  if (!pr.pure(tol)) {
    std::ostringstream os;
    os << "derived identities need a pure state (total purity residual " << pr.total() << ")";
    throw Error(ErrorKind::invalid_argument, os.str());
  }
  const RMatrix& w = s.omega();
  const double tr = w.trace();
  QubitIdentityReport r;
  r.det_omega = det3(w);
  r.x_norm2 = s.x().squaredNorm();
  r.y_norm2 = s.y().squaredNorm();
  r.trace_residual = tr - (s.x().dot(s.y()) - 0.5 * (tr * tr - (w * w).trace()));
  r.equal_norm_residual = r.x_norm2 - r.y_norm2;
  r.gram_trace_residual = (w * w.transpose()).trace() - (r.x_norm2 - 3.0 * r.det_omega);
  r.det_link_residual = r.x_norm2 - (1.0 + r.det_omega);
  return r;
}

ZMatrix z_matrix(const BipartiteState& s, double tol) {
  require_qubits(s);
  const RMatrix& w = s.omega();
  ZMatrix out;
  out.Z = z_of(w);
  out.det_omega = det3(w);
  out.adjugate_residual =
      max_abs(RMatrix(w * out.Z.transpose() + out.det_omega * RMatrix::Identity(3, 3)));
  out.entangled = max_abs(out.Z) > tol;
  return out;
}

MixedPositivityReport mixed_positivity_qubit(const BipartiteState& s, double tol) {
  require_qubits(s);
  const RVector& x = s.x();
  const RVector& y = s.y();
  const RMatrix& w = s.omega();
  const RMatrix z = z_of(w);
  const double det = det3(w);
  const double total = x.squaredNorm() + y.squaredNorm() + w.squaredNorm();
  const double xwy = x.dot(w * y);

  MixedPositivityReport r;
  r.values[0] = 3.0 - total;
  r.values[1] = 1.0 + 2.0 * (xwy - det) - total;
  r.values[2] = 1.0 - 2.0 * total + total * total + 8.0 * (xwy - det) -
                4.0 * x.dot(w * w.transpose() * x) - 4.0 * y.dot(w.transpose() * w * y) -
                4.0 * (x.squaredNorm() * y.squaredNorm() + 2.0 * x.dot(z * y) + z.squaredNorm());
  r.all_satisfied = true;
  for (int k = 0; k < 3; ++k) {
    r.satisfied[k] = r.values[k] >= -tol;
    r.equality[k] = std::abs(r.values[k]) <= tol;
    r.all_satisfied = r.all_satisfied && r.satisfied[k];
  }

  const std::vector<double> p = power_sums(s.rho(), 4);
  const std::vector<double> e = elementary_from_power(p, 4);
  r.reconciliation_residual = std::max({std::abs(r.values[0] - 8.0 * e[1]),
                                        std::abs(r.values[1] - 16.0 * e[2]),
                                        std::abs(r.values[2] - 256.0 * e[3])});
  r.min_eigenvalue = hermitian_eigenvalues(s.rho()).minCoeff();
  r.eigen_psd = r.min_eigenvalue >= -tol;
  return r;
}

std::pair<QuditState, QuditState> reduced_states(const BipartiteState& s, double tol) {
  const int dim = s.dim();
  return {QuditState::from_density(trace_out_right(s.rho(), dim, dim), tol),
          QuditState::from_density(trace_out_left(s.rho(), dim, dim), tol)};
}

BipartiteState werner(int dim, double alpha) {
  if (dim < 2) throw Error(ErrorKind::invalid_argument, "qudit dimension must be >= 2");
  const int n = dim * dim - 1;
  return BipartiteState::from_components(dim, RVector::Zero(n), RVector::Zero(n),
                                         alpha * RMatrix::Identity(n, n));
}

double local_unitary_deviation(const BipartiteState& s, const CMatrix& U) {
  if (U.rows() != s.dim() || U.cols() != s.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "unitary does not match the qudit dimension");
  }
  const CMatrix uu = kron(U, U);
  return max_abs(CMatrix(uu * s.rho() * uu.adjoint() - s.rho()));
}

WernerResidualModel::WernerResidualModel(const StructureTensors& tensors)
    : dim_(tensors.dim()), n_(tensors.size()) {
  const RMatrix id = RMatrix::Identity(n_, n_);
  c_identity_ = c_matrix(tensors, id);
  x_coeff_ = contract_last(tensors.d_entries(), id, n_);
}

PurityResiduals WernerResidualModel::residuals(double alpha) const {
  const double dim = dim_;
  const double k = dim * dim - 2.0;
  PurityResiduals r;
  r.sum = 1.0 + 4.0 / (dim * dim) * alpha * alpha * n_ - dim * dim;
  r.x = max_abs_vec(RVector(2.0 / dim * alpha * alpha * x_coeff_ / k));
  r.y = r.x;
  const RMatrix id = RMatrix::Identity(n_, n_);
  r.omega = max_abs(RMatrix(alpha * id - alpha * alpha * c_identity_ / k));
  return r;
}

WernerConsistency werner_consistency(int dim, const StructureTensors& tensors, double tol,
                                     int grid_points) {
  if (tensors.dim() != dim) {
    throw Error(ErrorKind::dimension_mismatch, "tensors do not match the qudit dimension");
  }
  if (grid_points < 3) throw Error(ErrorKind::invalid_argument, "need at least 3 grid points");
  const double n_dim = dim;
  const int n = tensors.size();
  WernerConsistency out;
  out.dim = dim;
  out.alpha_sum_magnitude = n_dim / 2.0;
  out.alpha_omega = -n_dim * (n_dim * n_dim - 2.0) / 4.0;

  // Trace condition with Tr(w w^T) = alpha^2 n: N^2 = 1 + (4/N^2) alpha^2 n.
  out.alpha_sum_magnitude_tensor = std::sqrt((n_dim * n_dim - 1.0) * n_dim * n_dim / (4.0 * n));
  // Omega condition: (N^2 - 2) alpha = alpha^2 c with c = (1/n) sum_i (dd - ff)_ii.
  const double c = c_matrix(tensors, RMatrix::Identity(n, n)).trace() / n;
  out.alpha_omega_tensor = (n_dim * n_dim - 2.0) / c;
  out.consistent = std::abs(std::abs(out.alpha_omega_tensor) - out.alpha_sum_magnitude_tensor) <= tol;

  const WernerResidualModel model(tensors);
  const double lo = -n_dim, hi = n_dim;
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_val = model(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double v = model(lo + i * step);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  // golden-section refinement on the bracketing grid cells
  double a = lo + std::max(best - 1, 0) * step;
  double b = lo + std::min(best + 1, grid_points - 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = model(x1), f2 = model(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a); f1 = model(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a); f2 = model(x2);
    }
  }
  const double refined = 0.5 * (a + b);
  const double refined_val = model(refined);
  if (refined_val < best_val) {
    out.min_residual = refined_val;
    out.argmin_alpha = refined;
  } else {
    out.min_residual = best_val;
    out.argmin_alpha = lo + best * step;
  }
  return out;
}

std::vector<WernerScanRow> werner_positivity_scan(int dim, double alpha_min, double alpha_max,
                                                  int steps, const StructureTensors& tensors,
                                                  double tol) {
  if (steps < 2) throw Error(ErrorKind::invalid_argument, "scan needs at least 2 steps");
  if (!(alpha_max >= alpha_min)) throw Error(ErrorKind::invalid_argument, "alpha range is empty");
  if (tensors.dim() != dim) {
    throw Error(ErrorKind::dimension_mismatch, "tensors do not match the qudit dimension");
  }
  const WernerResidualModel model(tensors);
  const double n_dim = dim;
  std::vector<WernerScanRow> rows;
  rows.reserve(steps);
  for (int s = 0; s < steps; ++s) {
    const double alpha = s == steps - 1 ? alpha_max
                                        : alpha_min + (alpha_max - alpha_min) * s / (steps - 1);
    const BipartiteState w = werner(dim, alpha);
    const std::vector<double> p = power_sums(w.rho(), 3);
    const std::vector<double> e = elementary_from_power(p);
    const double t = alpha / n_dim;
    WernerScanRow row;
    row.dim = dim;
    row.alpha = alpha;
    row.e2 = e[1];
    row.e3 = e[2];
    row.e3_condition =
        (n_dim * n_dim - 2.0) - 12.0 * (n_dim * n_dim - 2.0) * t * t - 32.0 * t * t * t;
    row.min_eigenvalue = hermitian_eigenvalues(w.rho()).minCoeff();
    row.e2_ok = row.e2 >= -tol;
    row.e3_ok = row.e3 >= -tol;
    row.psd = row.min_eigenvalue >= -tol;
    row.purity_residual = model(alpha);
    rows.push_back(row);
  }
  return rows;
}

namespace {

template <typename Pred>
AlphaWindow window_of(const std::vector<WernerScanRow>& rows, Pred pass) {
  AlphaWindow w{INFINITY, -INFINITY};
  for (const auto& r : rows) {
    if (!pass(r)) continue;
    w.lo = std::min(w.lo, r.alpha);
    w.hi = std::max(w.hi, r.alpha);
  }
  return w;
}

}  // namespace

AlphaWindow e2_window(const std::vector<WernerScanRow>& rows) {
  return window_of(rows, [](const WernerScanRow& r) { return r.e2_ok; });
}

AlphaWindow psd_window(const std::vector<WernerScanRow>& rows) {
  return window_of(rows, [](const WernerScanRow& r) { return r.psd; });
}

}  // namespace qudit
