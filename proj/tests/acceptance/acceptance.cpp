// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qudit/linalg.hpp"
#include "qudit/qudit_state.hpp"
#include "qudit/qutrit.hpp"
#include "qudit/random.hpp"
#include "qudit/su4_bridge.hpp"
#include "qudit/sun_basis.hpp"
#include "qudit/sym_poly.hpp"
#include "qudit/two_qudit.hpp"

using namespace qudit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Rng rng_for(std::uint64_t salt) { return Rng(0xacce97ULL * 1000 + salt); }

// 1. Pure-state invariants.
void pure_invariants(Outcome& o) {
  auto rng = rng_for(1);
  for (int n = 2; n <= 5; ++n) {
    const auto& t = structure_tensors(n);
    const auto ref = oracle::pure_invariants(n);
    double dp = 0.0, dq = 0.0;
    for (int s = 0; s < 200; ++s) {
      const auto inv = invariants(QuditState::from_density(random_pure_density(n, rng)), t);
      dp = std::max(dp, std::abs(inv.p2 - ref[0]));
      dq = std::max(dq, std::abs(inv.cubic - ref[1]));
    }
    o.detail << "N=" << n << " (" << ref[0] << "," << ref[1] << ") err " << sci(std::max(dp, dq))
             << "; ";
    o.require(dp <= 1e-9 && dq <= 1e-9, "N=" + std::to_string(n));
  }
}

// 2. Structure-tensor identities, on tensors rebuilt from textbook matrices.
void tensor_identities(Outcome& o) {
  double worst = 0.0, worst_ffdd = 0.0, worst_lib = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const auto g = oracle::gell_mann(n);
    const int m = static_cast<int>(g.size());
    const auto f = oracle::dense_tensor(g, false);
    const auto d = oracle::dense_tensor(g, true);
    auto at = [m](const std::vector<double>& t, int a, int b, int c) {
      return t[(static_cast<std::size_t>(a) * m + b) * m + c];
    };
    const auto& lib = structure_tensors(n);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          worst_lib = std::max(worst_lib, std::abs(lib.f(a, b, c) - at(f, a, b, c)));
          worst_lib = std::max(worst_lib, std::abs(lib.d(a, b, c) - at(d, a, b, c)));
        }
    for (int k = 0; k < m; ++k) {
      double tr = 0.0;
      for (int j = 0; j < m; ++j) tr += at(d, k, j, j);
      worst = std::max(worst, std::abs(tr));
      for (int q = 0; q < m; ++q) {
        double ff = 0.0, dd = 0.0;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            ff += at(f, i, j, k) * at(f, i, j, q);
            dd += at(d, i, j, k) * at(d, i, j, q);
          }
        const double delta = k == q ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(ff - n * delta));
        worst = std::max(worst, std::abs(dd - (n * n - 4.0) / n * delta));
      }
    }
    // f_mki f_nli = (2/N)(d_mn d_kl - d_ml d_kn) + d_mni d_kli - d_kni d_mli, with d_ab = delta.
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int e = 0; e < m; ++e) {
            double lhs = 0.0, rhs = 0.0;
            for (int i = 0; i < m; ++i) {
              lhs += at(f, a, b, i) * at(f, c, e, i);
              rhs += at(d, a, c, i) * at(d, b, e, i) - at(d, b, c, i) * at(d, a, e, i);
            }
            rhs += (2.0 / n) * ((a == c) * (b == e) - (a == e) * (b == c));
            worst_ffdd = std::max(worst_ffdd, std::abs(lhs - rhs));
          }
  }
  const auto q = oracle::dense_tensor(oracle::gell_mann(2), true);
  const bool d_zero = std::all_of(q.begin(), q.end(), [](double v) { return v == 0.0; }) &&
                      structure_tensors(2).d_entries().empty();
  o.detail << "ff/dd/trace-d " << sci(worst) << ", ff<->dd " << sci(worst_ffdd)
           << ", library vs oracle " << sci(worst_lib) << ", d(N=2) identically zero: "
           << (d_zero ? "yes" : "no");
  o.require(worst <= 1e-10, "contractions");
  o.require(worst_ffdd <= 1e-10, "ff<->dd identity");
  o.require(worst_lib <= 1e-12, "library tensors");
  o.require(d_zero, "d at N=2");
}

// 3. Qutrit closed form. Random physical qutrits are drawn from the induced
// measures with ancilla 2..4; pure states (a double root) are reported separately.
void qutrit_closed_form(Outcome& o) {
  auto rng = rng_for(3);
  const auto& t = structure_tensors(3);
  auto errors = [&](const CMatrix& rho, double& root_err, double& vieta) {
    const auto inv = invariants(QuditState::from_density(rho), t);
    const auto sp = qutrit::spectrum(inv.p2, inv.cubic);
    const RVector ev = oracle::eigenvalues(rho);
    const auto rev = sp.rho_eigenvalues();
    for (int k = 0; k < 3; ++k) root_err = std::max(root_err, std::abs(rev[k] - ev[k]));
    const auto& x = sp.roots;
    vieta = std::max({vieta, std::abs(x[0] + x[1] + x[2]),
                      std::abs(x[0] * x[1] + x[0] * x[2] + x[1] * x[2] + inv.p2),
                      std::abs(x[0] * x[1] * x[2] - 2.0 / 3.0 * inv.cubic)});
  };
  double root_err = 0.0, vieta = 0.0, pure_err = 0.0, pure_vieta = 0.0;
  for (int s = 0; s < 10000; ++s) errors(random_mixed_density(3, 2 + s % 3, rng), root_err, vieta);
  for (int s = 0; s < 1000; ++s) errors(random_pure_density(3, rng), pure_err, pure_vieta);
  o.detail << "10000 qutrits: max root error " << sci(root_err) << ", max Vieta residual "
           << sci(vieta) << "; pure states (not gated): root error " << sci(pure_err)
           << ", Vieta " << sci(pure_vieta);
  o.require(root_err <= 1e-9, "roots");
  o.require(vieta < 1e-10 && pure_vieta < 1e-10, "Vieta");
}

// 4. Region scan against direct eigenvalue positivity.
void region_scan(Outcome& o) {
  const int res = 512;
  const auto g = qutrit::region_scan(res);
  int disagreements = 0, admissible = 0;
  for (int i = 0; i < res; ++i) {
    const double p2 = g.abs_p[i] * g.abs_p[i];
    for (int j = 0; j < res; ++j) {
      const auto roots = oracle::cubic_roots(p2, g.cubic[j]);
      bool psd = false;
      if (roots.max_imag <= 1e-6) {
        Eigen::Matrix3cd rho = Eigen::Matrix3cd::Zero();
        for (int k = 0; k < 3; ++k) rho(k, k) = (1.0 + roots.re[k]) / 3.0;
        psd = oracle::eigenvalues(rho).minCoeff() >= -kPositivityTolerance;
      }
      const bool adm = g.admissible[g.index(i, j)];
      admissible += adm;
      disagreements += adm != psd;
    }
  }
  const bool corner = g.admissible[g.index(res - 1, res - 1)];
  const auto ev = qutrit::spectrum(3.0, 3.0).rho_eigenvalues();
  const double purity = ev[0] * ev[0] + ev[1] * ev[1] + ev[2] * ev[2];
  // Column nearest Q = 0: largest admissible |P|.
  int j0 = 0;
  for (int j = 0; j < res; ++j)
    if (std::abs(g.cubic[j]) < std::abs(g.cubic[j0])) j0 = j;
  double cut = -1.0;
  for (int i = 0; i < res; ++i)
    if (g.admissible[g.index(i, j0)]) cut = std::max(cut, g.abs_p[i]);
  const double cell = std::sqrt(3.0) / (res - 1);
  o.detail << "512x512 cells, " << admissible << " admissible, " << disagreements
           << " disagreements with eigenvalue positivity; corner admissible="
           << (corner ? "yes" : "no") << " Tr rho^2=" << purity << "; Q=" << sci(g.cubic[j0])
           << " cut at |P|=" << cut;
  o.require(disagreements == 0, "cell agreement");
  o.require(corner && std::abs(purity - 1.0) <= 1e-9, "pure corner");
  o.require(std::abs(cut - 1.0) <= cell, "Q=0 cut");
}

// 5. Two-qubit purity chain.
void two_qubit_chain(Outcome& o) {
  auto rng = rng_for(5);
  double worst_res = 0.0, worst_id = 0.0, worst_adj = 0.0;
  for (int s = 0; s < 500; ++s) {
    const auto st = BipartiteState::from_density(random_pure_density(4, rng));
    const auto r = purity_residuals_qubit(st);
    worst_res = std::max({worst_res, std::abs(r.sum), r.x, r.y, r.omega});
    const RMatrix& w = st.omega();
    const double det = w.determinant();
    const double x2 = st.x().squaredNorm(), y2 = st.y().squaredNorm();
    worst_id = std::max({worst_id, std::abs(x2 - y2), std::abs(x2 - (1.0 + det)),
                         std::abs((w * w.transpose()).trace() - (x2 - 3.0 * det))});
  }
  for (int s = 0; s < 1000; ++s) {
    const RMatrix w = random_gaussian_matrix(3, 3, rng);
    const RMatrix z = z_of(w);
    worst_adj = std::max(worst_adj, (w * z.transpose() + w.determinant() * RMatrix::Identity(3, 3))
                                        .cwiseAbs()
                                        .maxCoeff());
    worst_adj = std::max(worst_adj, (-z.transpose() - oracle::adjugate(w)).cwiseAbs().maxCoeff());
  }
  o.detail << "purity residuals " << sci(worst_res) << ", derived identities " << sci(worst_id)
           << ", adjugate " << sci(worst_adj);
  o.require(worst_res < 1e-8, "purity residuals");
  o.require(worst_id <= 1e-8, "derived identities");
  o.require(worst_adj <= 1e-10, "adjugate");
}

// 6. Werner consistency.
void werner_theorem(Outcome& o) {
  for (int n = 2; n <= 5; ++n) {
    const auto c = werner_consistency(n, structure_tensors(n));
    const double a1 = oracle::werner_alpha_trace(n), a2 = oracle::werner_alpha_omega(n);
    o.detail << "N=" << n << " |a1|=" << c.alpha_sum_magnitude_tensor
             << " a2=" << c.alpha_omega_tensor << " min residual " << sci(c.min_residual) << "; ";
    o.require(std::abs(c.alpha_sum_magnitude_tensor - a1) <= 1e-10, "alpha1");
    o.require(std::abs(c.alpha_omega_tensor - a2) <= 1e-10, "alpha2");
    if (n == 2) {
      o.require(c.consistent && std::abs(a2 + 1.0) == 0.0, "N=2 consistent at -1");
      const double at_singlet = purity_residuals_qudit(werner(2, -1.0), structure_tensors(2)).total();
      o.require(c.min_residual < 1e-10 && at_singlet < 1e-10, "N=2 residual");
    } else {
      o.require(!c.consistent, "N>2 inconsistent");
      o.require(std::abs(std::abs(a2) - a1) > 1.0, "gap");
      o.require(c.min_residual > 0.1, "N>2 residual bound");
    }
  }
}

// 7. e2 window versus full positivity.
void werner_windows(Outcome& o) {
  for (int n : {2, 3}) {
    const auto rows = werner_positivity_scan(n, -n, n, 2401, structure_tensors(n));
    const auto e2 = e2_window(rows);
    const auto psd = psd_window(rows);
    const auto ref = oracle::werner_psd_window(n);
    const double half = n / 2.0;
    bool interior_ok = true;
    for (const auto& r : rows) {
      if (std::abs(r.alpha) < half - 1e-9) interior_ok = interior_ok && r.e2_ok;
      if (std::abs(r.alpha) > half + 1e-9) interior_ok = interior_ok && !r.e2_ok;
    }
    o.detail << "N=" << n << " e2 window [" << e2.lo << ", " << e2.hi << "] (e2=0 at the ends), "
             << "PSD window [" << psd.lo << ", " << psd.hi << "]; ";
    o.require(interior_ok, "e2 verdicts");
    o.require(std::abs(e2.lo + half) <= 1e-12 && std::abs(e2.hi - half) <= 1e-12, "e2 window");
    o.require(std::abs(psd.lo - ref[0]) <= 1e-9 && std::abs(psd.hi - ref[1]) <= 1e-9, "PSD window");
    o.require(psd.hi < e2.hi && (n == 2 ? psd.lo >= e2.lo : psd.lo > e2.lo), "containment");
  }
  o.detail << "table N=2:";
  const auto rows = werner_positivity_scan(2, -1.5, 1.5, 13, structure_tensors(2));
  for (const auto& r : rows) {
    o.detail << " a=" << r.alpha << ":" << (r.e2_ok ? "e2" : "--") << "/" << (r.psd ? "psd" : "---");
  }
}

// 8. SU(4) bridge.
void su4_bridge(Outcome& o) {
  double dev = 0.0;
  const auto ids = su4::verify_generator_identities();
  for (const auto& g : ids) dev = std::max({dev, g.deviation, g.basis_deviation});
  auto rng = rng_for(8);
  double rt = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const auto st = BipartiteState::from_density(random_mixed_density(4, 1 + s % 4, rng));
    const auto back = su4::ququart_to_components(su4::components_to_ququart(st.x(), st.y(), st.omega()));
    rt = std::max({rt, (back.x - st.x()).cwiseAbs().maxCoeff(),
                   (back.y - st.y()).cwiseAbs().maxCoeff(),
                   (back.omega - st.omega()).cwiseAbs().maxCoeff()});
  }
  const auto sing = werner(2, -1.0);
  const RVector p = su4::components_to_ququart(sing.x(), sing.y(), sing.omega());
  const double p2 = p.squaredNorm();
  const auto pr = purity_residuals(QuditState::from_bloch(4, p), structure_tensors(4));
  o.detail << ids.size() << " identities, max deviation " << sci(dev) << "; round trip "
           << sci(rt) << "; singlet |P|^2=" << p2;
  o.require(ids.size() == 15 && dev <= 1e-15, "identities");
  o.require(rt <= 1e-12, "round trip");
  o.require(std::abs(p2 - 6.0) <= 1e-12 && pr.pure(1e-10), "singlet");
}

// 9. Symmetric polynomials.
void sym_poly(Outcome& o) {
  auto rng = rng_for(9);
  double newton = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int s = 0; s < 1000; ++s) {
      const CMatrix rho = random_mixed_density(n, 1 + s % (n + 1), rng);
      const auto p = power_sums(rho, 6);
      const auto e = elementary_from_power(p);
      std::array<double, 6> pa{};
      std::copy(p.begin(), p.end(), pa.begin());
      const auto closed = oracle::closed_form_elementary(pa);
      for (int k = 0; k < 6; ++k) newton = std::max(newton, std::abs(e[k] - closed[k]));
    }
  }
  int disagree = 0, negatives = 0, psd_count = 0, eps_violations = 0;
  for (int s = 0; s < 10000; ++s) {
    const int n = 2 + s % 5;
    CMatrix rho;
    switch ((s / 5) % 4) {
      case 0: rho = random_mixed_density(n, n, rng); break;
      case 1: rho = random_mixed_density(n, 1 + (s / 20) % n, rng); break;
      case 2: rho = random_hermitian_unit_trace(n, 0.3, rng); break;
      default: rho = random_hermitian_unit_trace(n, 1.0, rng); break;
    }
    const RVector ev = oracle::eigenvalues(rho);
    const bool oracle_psd = ev.minCoeff() >= -kPositivityTolerance;
    const auto r = positivity_check(rho);
    disagree += r.psd != oracle_psd;
    negatives += !oracle_psd;
    if (oracle_psd) {
      ++psd_count;
      const auto ps = oracle::power_sums_of_values(ev);
      eps_violations += (1 - ps[1]) < (2.0 / 3.0) * (1 - ps[2]) - 1e-12;
    }
  }
  o.detail << "Newton vs closed forms " << sci(newton) << "; PSD verdicts " << disagree
           << " disagreements in 10000 (" << negatives << " non-PSD); eps >= 2/3 delta violated on "
           << eps_violations << " of " << psd_count;
  o.require(newton <= 1e-11, "Newton");
  o.require(disagree == 0 && negatives > 0 && psd_count > 0, "verdicts");
  o.require(eps_violations == 0, "eps/delta");
}

// 10. SU(N) invariance.
void invariance(Outcome& o) {
  auto rng = rng_for(10);
  double worst = 0.0, orth = 0.0, cov = 0.0;
  for (int n : {2, 3, 4}) {
    const auto& t = structure_tensors(n);
    const auto& b = gell_mann_basis(n);
    for (int s = 0; s < 100; ++s) {
      const auto st = QuditState::from_density(random_mixed_density(n, 1 + s % n, rng));
      const CMatrix u = haar_unitary(n, rng);
      const CMatrix rotated = oracle::matmul(u, oracle::matmul(st.rho(), u.adjoint()));
      const auto rs = QuditState::from_density(rotated);
      const auto a = invariants(st, t), c = invariants(rs, t);
      worst = std::max({worst, std::abs(a.p2 - c.p2), std::abs(a.cubic - c.cubic),
                        std::abs(a.quartic - c.quartic), std::abs(entropy(st) - entropy(rs))});
      const auto adj = adjoint_of(u, b);
      orth = std::max(orth, orthogonality_residual(adj));
      cov = std::max(cov, covariance_residual(adj, t));
    }
  }
  o.detail << "invariant drift " << sci(worst) << ", R^T R - 1 " << sci(orth) << ", covariance "
           << sci(cov);
  o.require(worst < 1e-9, "invariants");
  o.require(orth <= 1e-8 && cov <= 1e-8, "adjoint");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"pure-state invariants", pure_invariants},
      {"structure-tensor identities", tensor_identities},
      {"qutrit closed form", qutrit_closed_form},
      {"qutrit admissible region", region_scan},
      {"two-qubit purity chain", two_qubit_chain},
      {"Werner consistency", werner_theorem},
      {"Werner e2 vs PSD windows", werner_windows},
      {"SU(4) bridge", su4_bridge},
      {"symmetric polynomials", sym_poly},
      {"SU(N) invariance", invariance},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", index, name, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
    ++index;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
