#include "qudit/su4_bridge.hpp"

#include <cmath>

#include "qudit/error.hpp"
#include "qudit/linalg.hpp"
#include "qudit/sun_basis.hpp"

namespace qudit::su4 {

namespace {

const Complex kI(0.0, 1.0);

struct Term {
  double coeff;
  int left;
  int right;
};

CMatrix expand(const std::vector<Term>& terms, double prefactor) {
  CMatrix m = CMatrix::Zero(4, 4);
  for (const auto& t : terms) m += t.coeff * kron(pauli(t.left), pauli(t.right));
  return prefactor * m;
}

CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  CMatrix m(4, 4);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_lengths(const RVector& x, const RVector& y, const RMatrix& w) {
  if (x.size() != 3 || y.size() != 3 || w.rows() != 3 || w.cols() != 3) {
    throw Error(ErrorKind::dimension_mismatch, "two-qubit components need 3, 3 and 3x3 entries");
  }
}

}  // namespace

CMatrix pauli(int index) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (index) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw Error(ErrorKind::invalid_argument, "Pauli index must be 0..3");
  }
  return m;
}

std::string PauliProduct::label() const {
  auto one = [](int k) { return k == 0 ? std::string("1") : "s" + std::to_string(k); };
  return one(left) + "⊗" + one(right);
}

CMatrix PauliProduct::matrix() const { return kron(pauli(left), pauli(right)); }

PauliProductBasis::PauliProductBasis() {
  for (int i = 1; i <= 3; ++i) products_.push_back({i, 0});
  for (int i = 1; i <= 3; ++i) products_.push_back({0, i});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) products_.push_back({i, j});

  const GellMannBasis& basis = gell_mann_basis(4);
  expansion_.resize(15, 15);
  for (int a = 0; a < 15; ++a) {
    for (int p = 0; p < 15; ++p) {
      expansion_(a, p) = 0.25 * trace_of_product(basis[a], products_[p].matrix()).real();
    }
  }
}

const PauliProductBasis& PauliProductBasis::instance() {
  static const PauliProductBasis basis;
  return basis;
}

std::vector<GeneratorIdentity> verify_generator_identities() {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  const Complex i = kI;
  using K = GeneratorKind;

  struct Spec {
    const char* name;
    GeneratorLabel label;
    CMatrix lhs;
    std::vector<Term> terms;
    double prefactor;
  };
  // Pauli indices: 0 = 1, 1 = s1, 2 = s2, 3 = s3.
  const std::vector<Spec> specs = {
      {"Lambda12_s", {K::symmetric, 1, 2},
       from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
       {{1, 3, 1}, {1, 0, 1}}, 0.5},
      {"Lambda34_s", {K::symmetric, 3, 4},
       from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
       {{1, 0, 1}, {-1, 3, 1}}, 0.5},
      {"Lambda13_s", {K::symmetric, 1, 3},
       from_rows({{0, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}),
       {{1, 1, 0}, {1, 1, 3}}, 0.5},
      {"Lambda24_s", {K::symmetric, 2, 4},
       from_rows({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}}),
       {{1, 1, 0}, {-1, 1, 3}}, 0.5},
      {"Lambda14_s", {K::symmetric, 1, 4},
       from_rows({{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}),
       {{1, 1, 1}, {-1, 2, 2}}, 0.5},
      {"Lambda23_s", {K::symmetric, 2, 3},
       from_rows({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}),
       {{1, 1, 1}, {1, 2, 2}}, 0.5},
      {"Lambda12_a", {K::antisymmetric, 1, 2},
       from_rows({{0, -i, 0, 0}, {i, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
       {{1, 0, 2}, {1, 3, 2}}, 0.5},
      {"Lambda34_a", {K::antisymmetric, 3, 4},
       from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -i}, {0, 0, i, 0}}),
       {{1, 0, 2}, {-1, 3, 2}}, 0.5},
      {"Lambda13_a", {K::antisymmetric, 1, 3},
       from_rows({{0, 0, -i, 0}, {0, 0, 0, 0}, {i, 0, 0, 0}, {0, 0, 0, 0}}),
       {{1, 2, 0}, {1, 2, 3}}, 0.5},
      {"Lambda24_a", {K::antisymmetric, 2, 4},
       from_rows({{0, 0, 0, 0}, {0, 0, 0, -i}, {0, 0, 0, 0}, {0, i, 0, 0}}),
       {{1, 2, 0}, {-1, 2, 3}}, 0.5},
      {"Lambda14_a", {K::antisymmetric, 1, 4},
       from_rows({{0, 0, 0, -i}, {0, 0, 0, 0}, {0, 0, 0, 0}, {i, 0, 0, 0}}),
       {{1, 1, 2}, {1, 2, 1}}, 0.5},
      {"Lambda23_a", {K::antisymmetric, 2, 3},
       from_rows({{0, 0, 0, 0}, {0, 0, -i, 0}, {0, i, 0, 0}, {0, 0, 0, 0}}),
       {{1, 2, 1}, {-1, 1, 2}}, 0.5},
      {"Lambda1", {K::diagonal, 1, 0},
       from_rows({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
       {{1, 0, 3}, {1, 3, 3}}, 0.5},
      {"Lambda2", {K::diagonal, 2, 0},
       r3 * from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, 0}}),
       {{1, 3, 0}, {0.5, 3, 3}, {-0.5, 0, 3}}, r3},
      {"Lambda3", {K::diagonal, 3, 0},
       r6 * from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -3}}),
       {{1, 3, 0}, {-1, 3, 3}, {1, 0, 3}}, r6},
  };

  const GellMannBasis& basis = gell_mann_basis(4);
  std::vector<GeneratorIdentity> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    GeneratorIdentity g;
    g.name = s.name;
    g.canonical_index = basis.index_of(s.label);
    g.explicit_matrix = s.lhs;
    g.expansion_matrix = expand(s.terms, s.prefactor);
    g.deviation = max_abs(CMatrix(g.explicit_matrix - g.expansion_matrix));
    g.basis_deviation = max_abs(CMatrix(g.explicit_matrix - basis[g.canonical_index]));
    out.push_back(std::move(g));
  }
  return out;
}

RVector components_to_ququart(const RVector& x, const RVector& y, const RMatrix& omega) {
  check_lengths(x, y, omega);
  RVector c(15);
  c << x, y, omega(0, 0), omega(0, 1), omega(0, 2), omega(1, 0), omega(1, 1), omega(1, 2),
      omega(2, 0), omega(2, 1), omega(2, 2);
  // sum_p c_p Pi_p = sum_a P_a lambda_a with lambda_a = T_ap Pi_p gives c = T^T P,
  // and T T^T = 1/2 (Tr lambda^2 = 2, Tr Pi^2 = 4), so P = 2 T c.
  return 2.0 * PauliProductBasis::instance().expansion() * c;
}

QubitComponents ququart_to_components(const RVector& bloch) {
  if (bloch.size() != 15) {
    throw Error(ErrorKind::dimension_mismatch, "SU(4) Bloch vector needs 15 entries");
  }
  const RVector c = PauliProductBasis::instance().expansion().transpose() * bloch;
  QubitComponents out{c.segment(0, 3), c.segment(3, 3), RMatrix(3, 3)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.omega(i, j) = c[6 + 3 * i + j];
  return out;
}

}  // namespace qudit::su4
