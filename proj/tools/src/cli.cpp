#include "qudit/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <cmath>
#include <istream>
#include <sstream>

#include "qudit/error.hpp"
#include "qudit/io.hpp"
#include "qudit/random.hpp"
#include "qudit/su4_bridge.hpp"

namespace qudit::cli {

namespace {

using io::Json;

constexpr int kMaxDim = 12;

constexpr std::array<std::pair<const char*, Command>, 9> kCommands{{
    {"basis", Command::basis},
    {"tensors", Command::tensors},
    {"check", Command::check},
    {"entropy", Command::entropy},
    {"qutrit-region", Command::qutrit_region},
    {"werner", Command::werner},
    {"convert", Command::convert},
    {"verify-su4", Command::verify_su4},
    {"random", Command::random},
}};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_argument, what); }

void validate(const CommandConfig& c) {
  if (c.N < 2) bad("N must be >= 2");
  if (c.N > kMaxDim) bad("N must be <= " + std::to_string(kMaxDim));
  if (!(c.tolerance > 0.0)) bad("tolerance must be positive");
}

Format format_or(const CommandConfig& c, Format fallback, bool csv_ok, bool json_ok) {
  const Format f = c.format.value_or(fallback);
  if ((f == Format::csv && !csv_ok) || (f == Format::json && !json_ok)) {
    bad(command_name(c.command) + " does not support --format " +
        (f == Format::csv ? "csv" : "json"));
  }
  return f;
}

Json read_input(const CommandConfig& c, std::istream& in) {
  if (c.input.empty()) bad("--input is required for " + command_name(c.command));
  if (c.input == "-") return Json::parse(in);
  std::ifstream file(c.input);
  if (!file) bad("cannot open input file " + c.input);
  return Json::parse(file);
}

void emit(const CommandConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) bad("cannot open output file " + c.output);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool is_bipartite(const Json& doc) { return doc.is_object() && doc.contains("omega"); }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> try_entropy(const CMatrix& rho, double tol) {
  try {
    return von_neumann_entropy(rho, tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::unphysical_state) throw;
    return std::nullopt;
  }
}

Json vec(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json mat(const RMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vec(m.row(i).transpose()));
  return out;
}

Json qudit_report(const QuditState& s, double tol) {
  const auto& tensors = structure_tensors(s.dim());
  const SymPolyReport pos = physicality(s, tol);
  const InvariantSet inv = invariants(s, tensors);
  const LowOrderElementary low = elementary_from_invariants(s.dim(), inv);
  const BlochPurityResiduals pr = purity_residuals(s, tensors);
  Json out;
  out["N"] = s.dim();
  out["bloch"] = vec(s.bloch());
  out["physical"] = pos.psd;
  out["positivity"] = io::report_to_json(pos);
  out["invariants"] = Json{{"p2", inv.p2}, {"Q", inv.cubic}, {"quartic", inv.quartic}};
  out["elementary_from_invariants"] = Json::array({low.e2, low.e3, low.e4});
  out["purity"] = Json{{"norm_residual", pr.norm}, {"vector_residual", pr.vec},
                       {"pure", pr.pure(std::sqrt(tol))}};
  out["entropy"] = optional_number(pos.psd ? try_entropy(s.rho(), tol) : std::nullopt);
  return out;
}

Json purity_json(const PurityResiduals& r, double tol) {
  return Json{{"sum", r.sum}, {"x", r.x}, {"y", r.y}, {"omega", r.omega},
              {"total", r.total()}, {"pure", r.pure(std::sqrt(tol))}};
}

Json bipartite_report(const BipartiteState& s, double tol) {
  const auto& tensors = structure_tensors(s.dim());
  const SymPolyReport pos = positivity_check(s.rho(), tol);
  Json out = io::bipartite_to_json(s);
  out["physical"] = pos.psd;
  out["positivity"] = io::report_to_json(pos);
  out["purity"] = purity_json(purity_residuals_qudit(s, tensors), tol);
  out["omega_trace_residual"] = omega_trace_residual(s, tensors);
  const auto [left, right] = reduced_states(s, tol);
  Json reduced;
  for (const auto& [name, r] : {std::pair{"left", &left}, std::pair{"right", &right}}) {
    reduced[name] = Json{{"bloch", vec(r->bloch())},
                         {"entropy", optional_number(pos.psd ? try_entropy(r->rho(), tol)
                                                             : std::nullopt)}};
  }
  out["reduced"] = reduced;
  out["entropy"] = optional_number(pos.psd ? try_entropy(s.rho(), tol) : std::nullopt);
  if (s.dim() == 2) {
    const ZMatrix z = z_matrix(s, tol);
    const MixedPositivityReport mp = mixed_positivity_qubit(s, tol);
    Json values = Json::array();
    Json satisfied = Json::array();
    for (int k = 0; k < 3; ++k) {
      values.push_back(mp.values[k]);
      satisfied.push_back(mp.satisfied[k]);
    }
    out["qubit"] = Json{
        {"purity", purity_json(purity_residuals_qubit(s), tol)},
        {"Z", mat(z.Z)},
        {"det_omega", z.det_omega},
        {"entangled", z.entangled},
        {"inequalities", Json{{"values", values}, {"satisfied", satisfied},
                              {"all_satisfied", mp.all_satisfied}}},
    };
  }
  return out;
}

Json window_json(const AlphaWindow& w) {
  if (w.empty()) return Json(nullptr);
  return Json{{"lo", w.lo}, {"hi", w.hi}};
}

Json scan_row_json(const WernerScanRow& r) {
  return Json{{"alpha", r.alpha},       {"e2", r.e2},
              {"e3", r.e3},             {"e3_condition", r.e3_condition},
              {"min_eigenvalue", r.min_eigenvalue}, {"e2_ok", r.e2_ok},
              {"e3_ok", r.e3_ok},       {"psd", r.psd},
              {"purity_residual", r.purity_residual}};
}

std::string run_basis(const CommandConfig& c) {
  format_or(c, Format::json, false, true);
  return dump(io::basis_to_json(gell_mann_basis(c.N)));
}

std::string run_tensors(const CommandConfig& c) {
  format_or(c, Format::json, false, true);
  return dump(io::tensors_to_json(StructureTensors::compute(gell_mann_basis(c.N), c.tolerance)));
}

std::string run_check(const CommandConfig& c, std::istream& in) {
  format_or(c, Format::json, false, true);
  const Json doc = read_input(c, in);
  if (is_bipartite(doc)) return dump(bipartite_report(io::bipartite_from_json(doc), c.tolerance));
  return dump(qudit_report(io::state_from_json(doc), c.tolerance));
}

std::string run_entropy(const CommandConfig& c, std::istream& in) {
  format_or(c, Format::json, false, true);
  const Json doc = read_input(c, in);
  Json out;
  if (is_bipartite(doc)) {
    const BipartiteState s = io::bipartite_from_json(doc);
    const double total = von_neumann_entropy(s.rho(), c.tolerance);
    const auto [left, right] = reduced_states(s, c.tolerance);
    out["N"] = s.dim();
    out["entropy"] = total;
    out["reduced_entropy"] = Json{{"left", von_neumann_entropy(left.rho(), c.tolerance)},
                                  {"right", von_neumann_entropy(right.rho(), c.tolerance)}};
  } else {
    const QuditState s = io::state_from_json(doc);
    out["N"] = s.dim();
    out["entropy"] = entropy(s, c.tolerance);
  }
  return dump(out);
}

std::string run_qutrit_region(const CommandConfig& c) {
  format_or(c, Format::csv, true, false);
  if (c.resolution < 2) bad("resolution must be >= 2");
  if (c.boundary_samples < 2) bad("boundary samples must be >= 2");
  const qutrit::RegionGrid grid = qutrit::region_scan(c.resolution, c.tolerance);
  if (!c.boundary_output.empty()) {
    std::ofstream file(c.boundary_output, std::ios::binary);
    if (!file) bad("cannot open output file " + c.boundary_output);
    io::write_boundary_csv(file, qutrit::boundary_curves(c.boundary_samples));
  }
  std::ostringstream os;
  io::write_region_csv(os, grid);
  return os.str();
}

std::string run_werner(const CommandConfig& c) {
  const Format f = format_or(c, Format::json, true, true);
  const double lo = c.alpha_min.value_or(-c.N);
  const double hi = c.alpha_max.value_or(c.N);
  if (c.steps < 2) bad("steps must be >= 2");
  if (!(hi > lo)) bad("alpha-max must exceed alpha-min");
  const auto& tensors = structure_tensors(c.N);
  const auto rows = werner_positivity_scan(c.N, lo, hi, c.steps, tensors, c.tolerance);
  if (f == Format::csv) {
    std::ostringstream os;
    io::write_werner_csv(os, rows);
    return os.str();
  }
  const WernerConsistency wc = werner_consistency(c.N, tensors, c.tolerance);
  Json scan = Json::array();
  for (const auto& r : rows) scan.push_back(scan_row_json(r));
  Json out;
  out["N"] = c.N;
  out["alpha1"] = Json::array({-wc.alpha_sum_magnitude, wc.alpha_sum_magnitude});
  out["alpha2"] = wc.alpha_omega;
  out["alpha1_from_tensors"] =
      Json::array({-wc.alpha_sum_magnitude_tensor, wc.alpha_sum_magnitude_tensor});
  out["alpha2_from_tensors"] = wc.alpha_omega_tensor;
  out["consistent"] = wc.consistent;
  out["min_purity_residual"] = wc.min_residual;
  out["argmin_alpha"] = wc.argmin_alpha;
  out["e2_window"] = window_json(e2_window(rows));
  out["psd_window"] = window_json(psd_window(rows));
  out["scan"] = scan;
  return dump(out);
}

std::string run_convert(const CommandConfig& c, std::istream& in) {
  format_or(c, Format::json, false, true);
  const Json doc = read_input(c, in);
  if (is_bipartite(doc)) {
    const BipartiteState s = io::bipartite_from_json(doc);
    if (s.dim() != 2) bad("convert handles two-qubit states (N = 2) only");
    const RVector p = su4::components_to_ququart(s.x(), s.y(), s.omega());
    return dump(io::state_to_json(QuditState::from_bloch(4, p), c.tolerance));
  }
  const QuditState s = io::state_from_json(doc);
  if (s.dim() != 4) bad("convert handles ququart states (N = 4) only");
  const su4::QubitComponents q = su4::ququart_to_components(s.bloch());
  return dump(io::bipartite_to_json(BipartiteState::from_components(2, q.x, q.y, q.omega)));
}

std::string run_verify_su4(const CommandConfig& c) {
  format_or(c, Format::json, false, true);
  const auto ids = su4::verify_generator_identities();
  double worst = 0.0;
  Json list = Json::array();
  for (const auto& g : ids) {
    worst = std::max({worst, g.deviation, g.basis_deviation});
    list.push_back(Json{{"name", g.name},
                        {"index", g.canonical_index},
                        {"generator", to_string(gell_mann_basis(4).label(g.canonical_index))},
                        {"deviation", g.deviation},
                        {"basis_deviation", g.basis_deviation}});
  }
  Json out;
  out["all_hold"] = worst <= 1e-15;
  out["max_deviation"] = worst;
  out["identities"] = list;
  out["dictionary"] = io::su4_dictionary_json();
  return dump(out);
}

Json sample(const CommandConfig& c, Rng& rng) {
  if (c.kind == "pure") {
    return io::state_to_json(QuditState::from_density(random_pure_density(c.N, rng)), c.tolerance);
  }
  if (c.kind == "mixed") {
    return io::state_to_json(QuditState::from_density(random_mixed_density(c.N, c.N, rng)),
                             c.tolerance);
  }
  const int n2 = c.N * c.N;
  if (c.kind == "bipartite-pure") {
    return io::bipartite_to_json(BipartiteState::from_density(random_pure_density(n2, rng)));
  }
  if (c.kind == "bipartite-mixed") {
    return io::bipartite_to_json(BipartiteState::from_density(random_mixed_density(n2, n2, rng)));
  }
  bad("unknown kind '" + c.kind + "' (pure, mixed, bipartite-pure, bipartite-mixed)");
}

std::string run_random(const CommandConfig& c) {
  format_or(c, Format::json, false, true);
  if (c.count < 1) bad("count must be >= 1");
  Rng rng(c.seed);
  if (c.count == 1) return dump(sample(c, rng));
  Json out = Json::array();
  for (int i = 0; i < c.count; ++i) out.push_back(sample(c, rng));
  return dump(out);
}

std::string dispatch(const CommandConfig& c, std::istream& in) {
  switch (c.command) {
    case Command::basis: return run_basis(c);
    case Command::tensors: return run_tensors(c);
    case Command::check: return run_check(c, in);
    case Command::entropy: return run_entropy(c, in);
    case Command::qutrit_region: return run_qutrit_region(c);
    case Command::werner: return run_werner(c);
    case Command::convert: return run_convert(c, in);
    case Command::verify_su4: return run_verify_su4(c);
    case Command::random: return run_random(c);
  }
  bad("unknown command");
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [n, cmd] : kCommands)
    if (name == n) return cmd;
  return std::nullopt;
}

std::string command_name(Command command) {
  for (const auto& [n, cmd] : kCommands)
    if (cmd == command) return n;
  return "unknown";
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    emit(config, out, dispatch(config, in));
    return kOk;
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return e.kind() == ErrorKind::unphysical_state ? kUnphysical : kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    write_error(err, "invalid_json", e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return kInvalidInput;
  }
}

}  // namespace qudit::cli
