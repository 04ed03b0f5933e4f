#include "qudit/io.hpp"

#include <charconv>
#include <cmath>

#include "qudit/error.hpp"
#include "qudit/su4_bridge.hpp"

namespace qudit::io {

const char* const kRegionCsvHeader = "abs_P,Q,admissible,fail_mask";
const char* const kBoundaryCsvHeader = "curve,abs_P,Q";
const char* const kWernerCsvHeader = "N,alpha,e2,e3,min_eigenvalue,psd,purity_residual";

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_argument, what); }

Json vector_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json matrix_json(const RMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

int read_dim(const Json& doc) {
  if (!doc.is_object()) bad("expected a JSON object");
  if (!doc.contains("N") || !doc["N"].is_number_integer()) bad("field N must be an integer");
  const int dim = doc["N"].get<int>();
  if (dim < 2) bad("N must be >= 2");
  return dim;
}

RVector read_vector(const Json& doc, const char* key, Eigen::Index len) {
  if (!doc.contains(key) || !doc[key].is_array()) bad(std::string("field ") + key + " must be an array");
  const Json& arr = doc[key];
  if (static_cast<Eigen::Index>(arr.size()) != len) {
    bad(std::string("field ") + key + " needs " + std::to_string(len) + " entries");
  }
  RVector v(len);
  for (Eigen::Index i = 0; i < len; ++i) {
    if (!arr[i].is_number()) bad(std::string("field ") + key + " must hold numbers");
    v[i] = arr[i].get<double>();
    if (!std::isfinite(v[i])) bad(std::string("field ") + key + " must be finite");
  }
  return v;
}

RMatrix read_matrix(const Json& rows, const std::string& key, Eigen::Index n) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
    bad("field " + key + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array");
  }
  RMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      bad("field " + key + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!row[j].is_number()) bad("field " + key + " must hold numbers");
      m(i, j) = row[j].get<double>();
      if (!std::isfinite(m(i, j))) bad("field " + key + " must be finite");
    }
  }
  return m;
}

Json records(std::span<const TensorEntry> entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back(Json{{"a", e.a}, {"b", e.b}, {"c", e.c}, {"value", e.value}});
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

Json basis_to_json(const GellMannBasis& basis) {
  Json out = Json::array();
  for (const auto& g : basis.generators()) {
    out.push_back(Json{{"re", matrix_json(g.real())}, {"im", matrix_json(g.imag())}});
  }
  return out;
}

GellMannBasis basis_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) bad("basis must be a non-empty array");
  const auto n = static_cast<int>(doc.size());
  const int dim = static_cast<int>(std::lround(std::sqrt(n + 1.0)));
  if (dim * dim - 1 != n) bad("basis size is not N^2 - 1");
  std::vector<CMatrix> gens;
  gens.reserve(n);
  for (const auto& g : doc) {
    if (!g.is_object() || !g.contains("re") || !g.contains("im")) bad("generator needs re and im");
    const RMatrix re = read_matrix(g["re"], "re", dim);
    const RMatrix im = read_matrix(g["im"], "im", dim);
    CMatrix m(dim, dim);
    m.real() = re;
    m.imag() = im;
    gens.push_back(std::move(m));
  }
  return GellMannBasis::from_generators(dim, std::move(gens));
}

Json tensors_to_json(const StructureTensors& tensors) {
  Json out;
  out["header"] = Json{{"N", tensors.dim()},
                       {"tolerance", tensors.tolerance()},
                       {"ordering", "sym-antisym-diag"}};
  out["f"] = records(tensors.f_entries());
  out["d"] = records(tensors.d_entries());
  return out;
}

Json report_to_json(const SymPolyReport& report) {
  return Json{{"dim", report.dim},
              {"power_sums", report.power_sums},
              {"elementary", report.elementary},
              {"psd", report.psd},
              {"min_eigenvalue", report.min_eigenvalue}};
}

Json state_to_json(const QuditState& state, double tol) {
  return Json{{"N", state.dim()}, {"bloch", vector_json(state.bloch())},
              {"physical", is_physical(state, tol)}};
}

QuditState state_from_json(const Json& doc) {
  const int dim = read_dim(doc);
  return QuditState::from_bloch(dim, read_vector(doc, "bloch", dim * dim - 1));
}

Json bipartite_to_json(const BipartiteState& state) {
  return Json{{"N", state.dim()},
              {"x", vector_json(state.x())},
              {"y", vector_json(state.y())},
              {"omega", matrix_json(state.omega())}};
}

BipartiteState bipartite_from_json(const Json& doc) {
  const int dim = read_dim(doc);
  const int n = dim * dim - 1;
  RVector x = read_vector(doc, "x", n);
  RVector y = read_vector(doc, "y", n);
  if (!doc.contains("omega")) bad("field omega is required");
  RMatrix w = read_matrix(doc["omega"], "omega", n);
  return BipartiteState::from_components(dim, std::move(x), std::move(y), std::move(w));
}

void write_region_csv(std::ostream& out, const qutrit::RegionGrid& grid) {
  out << kRegionCsvHeader << '\n';
  for (int i = 0; i < grid.resolution; ++i) {
    for (int j = 0; j < grid.resolution; ++j) {
      const std::size_t k = grid.index(i, j);
      out << format_double(grid.abs_p[i]) << ',' << format_double(grid.cubic[j]) << ','
          << int(grid.admissible[k]) << ',' << grid.fail_mask[k] << '\n';
    }
  }
}

void write_boundary_csv(std::ostream& out, const std::vector<qutrit::BoundarySample>& samples) {
  out << kBoundaryCsvHeader << '\n';
  for (const auto& s : samples) {
    out << s.curve << ',' << format_double(s.abs_p) << ',' << format_double(s.cubic) << '\n';
  }
}

void write_werner_csv(std::ostream& out, const std::vector<WernerScanRow>& rows) {
  out << kWernerCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.dim << ',' << format_double(r.alpha) << ',' << format_double(r.e2) << ','
        << format_double(r.e3) << ',' << format_double(r.min_eigenvalue) << ',' << int(r.psd)
        << ',' << format_double(r.purity_residual) << '\n';
  }
}

Json su4_dictionary_json() {
  const auto& pb = su4::PauliProductBasis::instance();
  const GellMannBasis& basis = gell_mann_basis(4);
  Json out = Json::array();
  for (int a = 0; a < 15; ++a) {
    Json labels = Json::array();
    Json coeffs = Json::array();
    for (int p = 0; p < 15; ++p) {
      const double c = pb.expansion()(a, p);
      if (std::abs(c) <= kSparseCutoff) continue;
      labels.push_back(pb.products()[p].label());
      coeffs.push_back(c);
    }
    out.push_back(Json{{"index", a}, {"generator", to_string(basis.label(a))},
                       {"labels", labels}, {"coeffs", coeffs}});
  }
  return out;
}

}  // namespace qudit::io
