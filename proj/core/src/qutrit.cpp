#include "qudit/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qudit/error.hpp"
#include "qudit/sym_poly.hpp"

namespace qudit::qutrit {

namespace {

// sqrt(3) Q / |P|^3, or +-inf when |P| = 0 and Q != 0.
double cos_chi(double abs_p, double cubic) {
  if (abs_p == 0.0) return cubic == 0.0 ? 0.0 : std::copysign(INFINITY, cubic);
  return std::sqrt(3.0) * cubic / (abs_p * abs_p * abs_p);
}

}  // namespace

Spectrum spectrum(double p2, double cubic, double tol) {
  if (!(p2 >= 0.0)) throw Error(ErrorKind::invalid_argument, "|P|^2 must be non-negative");
  Spectrum s;
  const double abs_p = std::sqrt(p2);
  if (abs_p == 0.0 && std::abs(cubic) <= tol) {
    s.degenerate = true;
    return s;
  }
  double c = cos_chi(abs_p, cubic);
  if (std::abs(c) > 1.0 + tol) {
    std::ostringstream os;
    os << "sqrt(3)|Q|/|P|^3 = " << std::abs(c) << " > 1: characteristic roots are not real";
    throw Error(ErrorKind::discriminant_violation, os.str());
  }
  c = std::clamp(c, -1.0, 1.0);
  s.chi = std::acos(c);
  const double third = s.chi / 3.0;
  const double scale = 2.0 * abs_p / std::sqrt(3.0);
  const double cs = std::cos(third);
  const double sn = std::sin(third);
  const double half_root3 = std::sqrt(3.0) / 2.0;
  s.roots[0] = scale * (-0.5 * cs - half_root3 * sn);
  s.roots[1] = scale * (-0.5 * cs + half_root3 * sn);
  s.roots[2] = scale * cs;
  return s;
}

std::vector<std::string> Admissibility::failed_conditions() const {
  std::vector<std::string> out;
  if (fail_mask & kNormBound) out.emplace_back("norm_bound");
  if (fail_mask & kCondition1) out.emplace_back("condition1");
  if (fail_mask & kDiscriminant) out.emplace_back("discriminant");
  if (fail_mask & kEigenPositivity) out.emplace_back("eigen_positivity");
  return out;
}

Admissibility admissible(double p2, double cubic, double tol) {
  if (!(p2 >= 0.0)) throw Error(ErrorKind::invalid_argument, "|P|^2 must be non-negative");
  Admissibility a;
  if (p2 > 3.0 + tol) a.fail_mask |= kNormBound;
  if (2.0 / 3.0 * cubic < p2 - 1.0 - tol) a.fail_mask |= kCondition1;
  const double abs_p = std::sqrt(p2);
  const bool real_roots =
      (abs_p == 0.0) ? std::abs(cubic) <= tol : std::abs(cos_chi(abs_p, cubic)) <= 1.0 + tol;
  if (!real_roots) {
    a.fail_mask |= kDiscriminant;
  } else {
    const Spectrum s = spectrum(p2, cubic, tol);
    // Roots near a double root carry ~sqrt(eps) error; confirm with the products of (1 + x_i).
    const double e2 = 3.0 - p2;
    const double e3 = 1.0 - p2 + 2.0 / 3.0 * cubic;
    if (1.0 + s.roots[0] < -tol && (e2 < -tol || e3 < -tol)) a.fail_mask |= kEigenPositivity;
  }
  a.admissible = a.fail_mask == 0;
  return a;
}

RegionGrid region_scan(int resolution, double tol) {
  if (resolution < 2) throw Error(ErrorKind::invalid_argument, "resolution must be >= 2");
  RegionGrid g;
  g.resolution = resolution;
  const double step_p = std::sqrt(3.0) / (resolution - 1);
  const double step_q = 6.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) g.abs_p.push_back(i == resolution - 1 ? std::sqrt(3.0) : i * step_p);
  for (int j = 0; j < resolution; ++j) g.cubic.push_back(j == resolution - 1 ? 3.0 : -3.0 + j * step_q);

  const std::size_t cells = static_cast<std::size_t>(resolution) * resolution;
  g.admissible.assign(cells, 0);
  g.fail_mask.assign(cells, 0);
  g.realized_psd.assign(cells, 0);
  for (int i = 0; i < resolution; ++i) {
    const double p2 = g.abs_p[i] * g.abs_p[i];
    for (int j = 0; j < resolution; ++j) {
      const std::size_t k = g.index(i, j);
      const Admissibility a = admissible(p2, g.cubic[j], tol);
      g.admissible[k] = a.admissible;
      g.fail_mask[k] = a.fail_mask;
      if (!(a.fail_mask & kDiscriminant)) {
        const auto ev = spectrum(p2, g.cubic[j], tol).rho_eigenvalues();
        CMatrix rho = CMatrix::Zero(3, 3);
        for (int r = 0; r < 3; ++r) rho(r, r) = ev[r];
        g.realized_psd[k] = positivity_check(rho, tol).psd;
      }
    }
  }
  return g;
}

std::vector<BoundarySample> boundary_curves(int samples) {
  if (samples < 2) throw Error(ErrorKind::invalid_argument, "need at least two samples per curve");
  std::vector<BoundarySample> out;
  const double max_p = std::sqrt(3.0);
  for (int i = 0; i < samples; ++i) {
    const double p = max_p * i / (samples - 1);
    const double q1 = 1.5 * (p * p - 1.0);
    if (q1 >= -3.0 && q1 <= 3.0) out.push_back({"condition1", p, q1});
  }
  for (int i = 0; i < samples; ++i) {
    const double p = max_p * i / (samples - 1);
    out.push_back({"discriminant_upper", p, p * p * p / std::sqrt(3.0)});
  }
  for (int i = 0; i < samples; ++i) {
    const double p = max_p * i / (samples - 1);
    out.push_back({"discriminant_lower", p, -p * p * p / std::sqrt(3.0)});
  }
  for (int i = 0; i < samples; ++i) {
    out.push_back({"norm_bound", max_p, -3.0 + 6.0 * i / (samples - 1)});
  }
  return out;
}

}  // namespace qudit::qutrit
