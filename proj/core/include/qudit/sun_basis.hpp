#pragma once

#include <span>
#include <string>
#include <vector>

#include "qudit/types.hpp"

namespace qudit {

enum class GeneratorKind { symmetric, antisymmetric, diagonal };

/// Which generalized Gell-Mann generator an index refers to. Levels are 1-based.
/// Off-diagonal generators use (j, k) with j < k; diagonal generators use j = l
/// (1 <= l <= N-1) and k = 0.
struct GeneratorLabel {
  GeneratorKind kind;
  int j;
  int k;

  bool operator==(const GeneratorLabel&) const = default;
};

/// "sym(1,2)", "asym(1,3)", "diag(2)".
std::string to_string(const GeneratorLabel& label);

/// The N^2 - 1 generalized Gell-Mann matrices, normalised to Tr(l_a l_b) = 2 delta_ab.
///
/// Canonical ordering: every symmetric off-diagonal generator for j < k in
/// lexicographic (j, k) order, then the antisymmetric ones in the same order, then
/// the N - 1 diagonal generators in increasing l. For N = 2 this is (sigma_x,
/// sigma_y, sigma_z).
class GellMannBasis {
 public:
  /// Throws Error{invalid_argument} for dim < 2.
  static GellMannBasis generate(int dim);

  /// Wraps arbitrary generators (e.g. a deliberately broken basis in a test).
  /// Only the count and shape are validated.
  static GellMannBasis from_generators(int dim, std::vector<CMatrix> generators);

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return static_cast<int>(generators_.size()); }

  const CMatrix& operator[](int a) const { return generators_.at(a); }
  const std::vector<CMatrix>& generators() const noexcept { return generators_; }

  GeneratorLabel label(int a) const;
  /// Inverse of label(); throws Error{invalid_argument} for labels outside the basis.
  int index_of(const GeneratorLabel& label) const;

  /// Sum_a coeffs[a] * lambda_a.
  CMatrix combine(const RVector& coeffs) const;

 private:
  GellMannBasis(int dim, std::vector<CMatrix> generators)
      : dim_(dim), generators_(std::move(generators)) {}

  int dim_;
  std::vector<CMatrix> generators_;
};

/// Canonical 0-based index of the textbook SU(3) matrix lambda_n (n = 1..8).
int standard_su3_index(int n);

struct TensorEntry {
  int a;
  int b;
  int c;
  double value;
};

/// Antisymmetric structure constants f_abc and symmetric tensor d_abc in sparse form.
///
/// Every non-zero entry is stored under each of its index permutations, sorted by
/// (a, b, c), with a row index per (a, b) pair.
class StructureTensors {
 public:
  /// f_abc = Tr([l_a, l_b] l_c) / 4i, d_abc = Tr({l_a, l_b} l_c) / 4.
  /// Throws Error{broken_basis} when an entry has an imaginary residue above tol.
  static StructureTensors compute(const GellMannBasis& basis, double tol = kDefaultTolerance);

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return n_; }
  double tolerance() const noexcept { return tolerance_; }

  double f(int a, int b, int c) const { return lookup(f_, f_offsets_, a, b, c); }
  double d(int a, int b, int c) const { return lookup(d_, d_offsets_, a, b, c); }

  std::span<const TensorEntry> f_entries() const noexcept { return f_; }
  std::span<const TensorEntry> d_entries() const noexcept { return d_; }

  /// Entries f_{ab*} / d_{ab*} for a fixed leading pair.
  std::span<const TensorEntry> f_row(int a, int b) const { return row(f_, f_offsets_, a, b); }
  std::span<const TensorEntry> d_row(int a, int b) const { return row(d_, d_offsets_, a, b); }

  /// Entries with a <= b <= c (a < b < c for f): one representative per orbit.
  std::vector<TensorEntry> unique_f() const;
  std::vector<TensorEntry> unique_d() const;

  /// q_c = d_abc u_a v_b.
  RVector contract_d(const RVector& u, const RVector& v) const;
  /// d_abc u_a u_b u_c.
  double d_cubic(const RVector& u) const;

 private:
  StructureTensors() = default;

  double lookup(const std::vector<TensorEntry>& entries, const std::vector<int>& offsets,
                int a, int b, int c) const;
  std::span<const TensorEntry> row(const std::vector<TensorEntry>& entries,
                                   const std::vector<int>& offsets, int a, int b) const;
  static std::vector<int> build_offsets(const std::vector<TensorEntry>& entries, int n);

  int dim_ = 0;
  int n_ = 0;
  double tolerance_ = kDefaultTolerance;
  std::vector<TensorEntry> f_;
  std::vector<TensorEntry> d_;
  std::vector<int> f_offsets_;
  std::vector<int> d_offsets_;
};

/// Process-wide memoised bases and tensors; safe to call concurrently.
const GellMannBasis& gell_mann_basis(int dim);
const StructureTensors& structure_tensors(int dim);

struct IdentityCheck {
  bool holds;
  double max_residual;
};

/// lambda_a lambda_b = (2/N) delta_ab 1 + (d_abc + i f_abc) lambda_c for every pair.
IdentityCheck verify_product_rule(const GellMannBasis& basis, const StructureTensors& tensors,
                                  double tol = kDefaultTolerance);

/// f_mki f_nli = (2/N)(d_mn d_kl - d_ml d_kn) + d_mni d_kli - d_kni d_mli, entrywise.
IdentityCheck verify_ff_dd_identity(const StructureTensors& tensors,
                                    double tol = kDefaultTolerance);

/// f_ijk f_ijn = N d_kn, d_ijk d_ijn = ((N^2-4)/N) d_kn and sum_j d_ijj = 0.
struct ContractionCheck {
  double ff_residual;
  double dd_residual;
  double trace_d_residual;
  bool holds(double tol) const {
    return ff_residual <= tol && dd_residual <= tol && trace_d_residual <= tol;
  }
};
ContractionCheck verify_contractions(const StructureTensors& tensors);

/// Adjoint-representation image of a fundamental unitary: U l_j U^dagger = R_kj l_k.
struct AdjointMatrix {
  int dim;
  RMatrix R;
};

/// R_kj = Tr(l_k U l_j U^dagger) / 2. Throws Error{not_unitary} when
/// max |U^dagger U - 1| exceeds tol.
AdjointMatrix adjoint_of(const CMatrix& U, const GellMannBasis& basis,
                         double tol = kDefaultTolerance);

/// max |R^T R - 1|.
double orthogonality_residual(const AdjointMatrix& adj);

/// Largest entrywise deviation of f_kql R_kj R_qp R_lm from f_jpm, and likewise for d.
double covariance_residual(const AdjointMatrix& adj, const StructureTensors& tensors);

}  // namespace qudit
