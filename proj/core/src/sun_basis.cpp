#include "qudit/sun_basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "qudit/error.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

namespace {

const Complex kI(0.0, 1.0);

int pair_count(int dim) { return dim * (dim - 1) / 2; }

// Position of (j, k), j < k (0-based levels), in lexicographic order.
int pair_position(int dim, int j, int k) {
  return j * dim - j * (j + 1) / 2 + (k - j - 1);
}

void add_permutations(std::vector<TensorEntry>& out, int a, int b, int c, double v,
                      bool antisymmetric) {
  const double s = antisymmetric ? -1.0 : 1.0;
  const TensorEntry perms[6] = {
      {a, b, c, v},     {b, c, a, v},     {c, a, b, v},
      {b, a, c, s * v}, {a, c, b, s * v}, {c, b, a, s * v},
  };
  for (const auto& e : perms) {
    const bool dup = std::any_of(out.end() - std::min<std::ptrdiff_t>(out.size(), 6), out.end(),
                                 [&](const TensorEntry& o) {
                                   return o.a == e.a && o.b == e.b && o.c == e.c;
                                 });
    if (!dup) out.push_back(e);
  }
}

}  // namespace

std::string to_string(const GeneratorLabel& label) {
  std::ostringstream os;
  switch (label.kind) {
    case GeneratorKind::symmetric: os << "sym(" << label.j << "," << label.k << ")"; break;
    case GeneratorKind::antisymmetric: os << "asym(" << label.j << "," << label.k << ")"; break;
    case GeneratorKind::diagonal: os << "diag(" << label.j << ")"; break;
  }
  return os.str();
}

GellMannBasis GellMannBasis::generate(int dim) {
  if (dim < 2) {
    throw Error(ErrorKind::invalid_argument, "Gell-Mann basis needs dimension >= 2");
  }
  std::vector<CMatrix> gens;
  gens.reserve(dim * dim - 1);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix g = CMatrix::Zero(dim, dim);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      gens.push_back(std::move(g));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix g = CMatrix::Zero(dim, dim);
      g(j, k) = -kI;
      g(k, j) = kI;
      gens.push_back(std::move(g));
    }
  }
  for (int l = 1; l < dim; ++l) {
    CMatrix g = CMatrix::Zero(dim, dim);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = norm;
    g(l, l) = -l * norm;
    gens.push_back(std::move(g));
  }
  return GellMannBasis(dim, std::move(gens));
}

GellMannBasis GellMannBasis::from_generators(int dim, std::vector<CMatrix> generators) {
  if (dim < 2) {
    throw Error(ErrorKind::invalid_argument, "Gell-Mann basis needs dimension >= 2");
  }
  if (static_cast<int>(generators.size()) != dim * dim - 1) {
    throw Error(ErrorKind::dimension_mismatch, "basis must have N^2 - 1 generators");
  }
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw Error(ErrorKind::dimension_mismatch, "generator has the wrong shape");
    }
  }
  return GellMannBasis(dim, std::move(generators));
}

GeneratorLabel GellMannBasis::label(int a) const {
  const int pairs = pair_count(dim_);
  if (a < 0 || a >= size()) throw Error(ErrorKind::invalid_argument, "generator index out of range");
  if (a >= 2 * pairs) return {GeneratorKind::diagonal, a - 2 * pairs + 1, 0};
  const GeneratorKind kind = a < pairs ? GeneratorKind::symmetric : GeneratorKind::antisymmetric;
  int pos = a % pairs;
  for (int j = 0; j < dim_; ++j) {
    const int row = dim_ - j - 1;
    if (pos < row) return {kind, j + 1, j + 2 + pos};
    pos -= row;
  }
  throw Error(ErrorKind::invalid_argument, "generator index out of range");
}

int GellMannBasis::index_of(const GeneratorLabel& label) const {
  const int pairs = pair_count(dim_);
  if (label.kind == GeneratorKind::diagonal) {
    if (label.j < 1 || label.j >= dim_) throw Error(ErrorKind::invalid_argument, "bad diagonal label");
    return 2 * pairs + label.j - 1;
  }
  if (label.j < 1 || label.k <= label.j || label.k > dim_) {
    throw Error(ErrorKind::invalid_argument, "bad off-diagonal label");
  }
  const int pos = pair_position(dim_, label.j - 1, label.k - 1);
  return label.kind == GeneratorKind::symmetric ? pos : pairs + pos;
}

CMatrix GellMannBasis::combine(const RVector& coeffs) const {
  if (coeffs.size() != size()) {
    throw Error(ErrorKind::dimension_mismatch, "coefficient vector must have N^2 - 1 entries");
  }
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (int a = 0; a < size(); ++a) {
    if (coeffs[a] != 0.0) out += coeffs[a] * generators_[a];
  }
  return out;
}

int standard_su3_index(int n) {
  // lambda_1..8 = sym12, asym12, diag1, sym13, asym13, sym23, asym23, diag2
  static constexpr int map[8] = {0, 3, 6, 1, 4, 2, 5, 7};
  if (n < 1 || n > 8) throw Error(ErrorKind::invalid_argument, "SU(3) label must be 1..8");
  return map[n - 1];
}

StructureTensors StructureTensors::compute(const GellMannBasis& basis, double tol) {
  const int n = basis.size();
  StructureTensors t;
  t.dim_ = basis.dim();
  t.n_ = n;
  t.tolerance_ = tol;

  std::vector<CMatrix> products(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) products[a * n + b] = basis[a] * basis[b];
  }

  double worst_imag = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const CMatrix comm = products[a * n + b] - products[b * n + a];
      const CMatrix anti = products[a * n + b] + products[b * n + a];
      for (int c = b; c < n; ++c) {
        const Complex dv = trace_of_product(anti, basis[c]) / 4.0;
        worst_imag = std::max(worst_imag, std::abs(dv.imag()));
        if (std::abs(dv.real()) > kSparseCutoff) add_permutations(t.d_, a, b, c, dv.real(), false);
        if (a < b && b < c) {
          const Complex fv = trace_of_product(comm, basis[c]) / (4.0 * kI);
          worst_imag = std::max(worst_imag, std::abs(fv.imag()));
          if (std::abs(fv.real()) > kSparseCutoff) add_permutations(t.f_, a, b, c, fv.real(), true);
        }
      }
    }
  }
  if (worst_imag > tol) {
    std::ostringstream os;
    os << "structure tensor entry has imaginary residue " << worst_imag << "; basis is not Hermitian";
    throw Error(ErrorKind::broken_basis, os.str());
  }

  auto by_index = [](const TensorEntry& x, const TensorEntry& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  };
  std::sort(t.f_.begin(), t.f_.end(), by_index);
  std::sort(t.d_.begin(), t.d_.end(), by_index);
  t.f_offsets_ = build_offsets(t.f_, n);
  t.d_offsets_ = build_offsets(t.d_, n);
  return t;
}

std::vector<int> StructureTensors::build_offsets(const std::vector<TensorEntry>& entries, int n) {
  std::vector<int> offsets(static_cast<size_t>(n) * n + 1, 0);
  for (const auto& e : entries) ++offsets[e.a * n + e.b + 1];
  for (size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  return offsets;
}

std::span<const TensorEntry> StructureTensors::row(const std::vector<TensorEntry>& entries,
                                                   const std::vector<int>& offsets, int a,
                                                   int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error(ErrorKind::invalid_argument, "tensor index out of range");
  }
  const int lo = offsets[a * n_ + b];
  const int hi = offsets[a * n_ + b + 1];
  return std::span<const TensorEntry>(entries.data() + lo, static_cast<size_t>(hi - lo));
}

double StructureTensors::lookup(const std::vector<TensorEntry>& entries,
                                const std::vector<int>& offsets, int a, int b, int c) const {
  const auto r = row(entries, offsets, a, b);
  const auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const TensorEntry& e, int cc) { return e.c < cc; });
  return (it != r.end() && it->c == c) ? it->value : 0.0;
}

std::vector<TensorEntry> StructureTensors::unique_f() const {
  std::vector<TensorEntry> out;
  for (const auto& e : f_) {
    if (e.a < e.b && e.b < e.c) out.push_back(e);
  }
  return out;
}

std::vector<TensorEntry> StructureTensors::unique_d() const {
  std::vector<TensorEntry> out;
  for (const auto& e : d_) {
    if (e.a <= e.b && e.b <= e.c) out.push_back(e);
  }
  return out;
}

RVector StructureTensors::contract_d(const RVector& u, const RVector& v) const {
  if (u.size() != n_ || v.size() != n_) {
    throw Error(ErrorKind::dimension_mismatch, "vector length must be N^2 - 1");
  }
  RVector q = RVector::Zero(n_);
  for (const auto& e : d_) q[e.c] += e.value * u[e.a] * v[e.b];
  return q;
}

double StructureTensors::d_cubic(const RVector& u) const {
  if (u.size() != n_) throw Error(ErrorKind::dimension_mismatch, "vector length must be N^2 - 1");
  double s = 0.0;
  for (const auto& e : d_) s += e.value * u[e.a] * u[e.b] * u[e.c];
  return s;
}

const GellMannBasis& gell_mann_basis(int dim) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GellMannBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[dim];
  if (!slot) slot = std::make_unique<const GellMannBasis>(GellMannBasis::generate(dim));
  return *slot;
}

const StructureTensors& structure_tensors(int dim) {
  const GellMannBasis& basis = gell_mann_basis(dim);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const StructureTensors>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[dim];
  if (!slot) slot = std::make_unique<const StructureTensors>(StructureTensors::compute(basis));
  return *slot;
}

IdentityCheck verify_product_rule(const GellMannBasis& basis, const StructureTensors& tensors,
                                  double tol) {
  if (basis.dim() != tensors.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "basis and tensors have different N");
  }
  const int n = basis.size();
  const int dim = basis.dim();
  const CMatrix id = CMatrix::Identity(dim, dim);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      CMatrix rhs = (a == b ? 2.0 / dim : 0.0) * id;
      for (const auto& e : tensors.d_row(a, b)) rhs += e.value * basis[e.c];
      for (const auto& e : tensors.f_row(a, b)) rhs += (kI * e.value) * basis[e.c];
      const CMatrix diff = basis[a] * basis[b] - rhs;
      worst = std::max(worst, diff.norm());
    }
  }
  return {worst <= tol, worst};
}

IdentityCheck verify_ff_dd_identity(const StructureTensors& tensors, double tol) {
  const int n = tensors.size();
  const int dim = tensors.dim();
  const size_t n2 = static_cast<size_t>(n) * n;

  // Group entries by their last index so that sums over i become pair loops.
  std::vector<std::vector<TensorEntry>> f_by_last(n), d_by_last(n);
  for (const auto& e : tensors.f_entries()) f_by_last[e.c].push_back(e);
  for (const auto& e : tensors.d_entries()) d_by_last[e.c].push_back(e);

  // ff[(m n + k) n^2 + (n' n + l)] = f_mki f_nli ; dd likewise with d_mni d_kli
  std::vector<double> ff(n2 * n2, 0.0), dd(n2 * n2, 0.0);
  for (int i = 0; i < n; ++i) {
    for (const auto& x : f_by_last[i]) {
      for (const auto& y : f_by_last[i]) {
        ff[(x.a * n + x.b) * n2 + (y.a * n + y.b)] += x.value * y.value;
      }
    }
    for (const auto& x : d_by_last[i]) {
      for (const auto& y : d_by_last[i]) {
        dd[(x.a * n + x.b) * n2 + (y.a * n + y.b)] += x.value * y.value;
      }
    }
  }

  auto idx = [&](int p, int q, int r, int s) { return (p * n + q) * n2 + (r * n + s); };
  double worst = 0.0;
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      for (int nn = 0; nn < n; ++nn) {
        for (int l = 0; l < n; ++l) {
          const double delta = (2.0 / dim) * ((m == nn && k == l ? 1.0 : 0.0) -
                                              (m == l && k == nn ? 1.0 : 0.0));
          const double rhs = delta + dd[idx(m, nn, k, l)] - dd[idx(k, nn, m, l)];
          worst = std::max(worst, std::abs(ff[idx(m, k, nn, l)] - rhs));
        }
      }
    }
  }
  return {worst <= tol, worst};
}

ContractionCheck verify_contractions(const StructureTensors& tensors) {
  const int n = tensors.size();
  const int dim = tensors.dim();
  RMatrix ff = RMatrix::Zero(n, n), dd = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto fr = tensors.f_row(i, j);
      for (const auto& x : fr) {
        for (const auto& y : fr) ff(x.c, y.c) += x.value * y.value;
      }
      const auto dr = tensors.d_row(i, j);
      for (const auto& x : dr) {
        for (const auto& y : dr) dd(x.c, y.c) += x.value * y.value;
      }
    }
  }
  const RMatrix id = RMatrix::Identity(n, n);
  ContractionCheck out{};
  out.ff_residual = max_abs(RMatrix(ff - dim * id));
  out.dd_residual = max_abs(RMatrix(dd - ((dim * dim - 4.0) / dim) * id));
  double worst_trace = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += tensors.d(i, j, j);
    worst_trace = std::max(worst_trace, std::abs(s));
  }
  out.trace_d_residual = worst_trace;
  return out;
}

AdjointMatrix adjoint_of(const CMatrix& U, const GellMannBasis& basis, double tol) {
  if (U.rows() != basis.dim() || U.cols() != basis.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "unitary does not match the basis dimension");
  }
  require_unitary(U, tol);
  const int n = basis.size();
  AdjointMatrix out{basis.dim(), RMatrix(n, n)};
  for (int j = 0; j < n; ++j) {
    const CMatrix rotated = U * basis[j] * U.adjoint();
    for (int k = 0; k < n; ++k) out.R(k, j) = 0.5 * trace_of_product(basis[k], rotated).real();
  }
  return out;
}

double orthogonality_residual(const AdjointMatrix& adj) {
  const RMatrix id = RMatrix::Identity(adj.R.rows(), adj.R.cols());
  return max_abs(RMatrix(adj.R.transpose() * adj.R - id));
}

namespace {

// max_{jpm} |T_kql R_kj R_qp R_lm - T_jpm| for a sparse rank-3 tensor T.
double tensor_covariance(std::span<const TensorEntry> entries, const RMatrix& R,
                         const StructureTensors& tensors, bool use_f) {
  const int n = static_cast<int>(R.rows());
  auto at = [n](int x, int y, int z) { return (static_cast<size_t>(x) * n + y) * n + z; };
  std::vector<double> a(static_cast<size_t>(n) * n * n, 0.0);  // a[k,q,m]
  for (const auto& e : entries) {
    for (int m = 0; m < n; ++m) a[at(e.a, e.b, m)] += e.value * R(e.c, m);
  }
  std::vector<double> b(a.size(), 0.0);  // b[k,p,m]
  for (int k = 0; k < n; ++k)
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p) {
        const double r = R(q, p);
        if (r == 0.0) continue;
        for (int m = 0; m < n; ++m) b[at(k, p, m)] += a[at(k, q, m)] * r;
      }
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < n; ++p)
      for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += R(k, j) * b[at(k, p, m)];
        const double expected = use_f ? tensors.f(j, p, m) : tensors.d(j, p, m);
        worst = std::max(worst, std::abs(s - expected));
      }
  return worst;
}

}  // namespace

double covariance_residual(const AdjointMatrix& adj, const StructureTensors& tensors) {
  if (adj.R.rows() != tensors.size()) {
    throw Error(ErrorKind::dimension_mismatch, "adjoint matrix does not match the tensors");
  }
  return std::max(tensor_covariance(tensors.f_entries(), adj.R, tensors, true),
                  tensor_covariance(tensors.d_entries(), adj.R, tensors, false));
}

}  // namespace qudit
