#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qudit/qudit_state.hpp"
#include "qudit/qutrit.hpp"
#include "qudit/sun_basis.hpp"
#include "qudit/sym_poly.hpp"
#include "qudit/two_qudit.hpp"

namespace qudit::io {

using Json = nlohmann::ordered_json;

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// [{re: [[...]], im: [[...]]}, ...] in canonical order.
Json basis_to_json(const GellMannBasis& basis);
/// Inverse of basis_to_json. Throws Error{invalid_argument} on schema violations.
GellMannBasis basis_from_json(const Json& doc);

/// {header: {N, tolerance, ordering: "sym-antisym-diag"}, f: [{a, b, c, value}], d: [...]}
/// with one record per index permutation of every non-zero entry.
Json tensors_to_json(const StructureTensors& tensors);

/// {dim, power_sums, elementary, psd, min_eigenvalue}
Json report_to_json(const SymPolyReport& report);

/// {N, bloch: [...], physical}
Json state_to_json(const QuditState& state, double tol = kPositivityTolerance);
/// Accepts {N, bloch}; `physical`, if present, is ignored. Throws Error{invalid_argument}.
QuditState state_from_json(const Json& doc);

/// {N, x: [...], y: [...], omega: [[...]]}
Json bipartite_to_json(const BipartiteState& state);
BipartiteState bipartite_from_json(const Json& doc);

/// Columns abs_P, Q, admissible, fail_mask.
void write_region_csv(std::ostream& out, const qutrit::RegionGrid& grid);
/// Columns curve, abs_P, Q.
void write_boundary_csv(std::ostream& out, const std::vector<qutrit::BoundarySample>& samples);
/// Columns N, alpha, e2, e3, min_eigenvalue, psd, purity_residual.
void write_werner_csv(std::ostream& out, const std::vector<WernerScanRow>& rows);

/// [{index, generator, labels: ["s3⊗s1", ...], coeffs: [...]}, ...] for SU(4).
Json su4_dictionary_json();

/// Header lines of the CSV exports, for validation.
extern const char* const kRegionCsvHeader;
extern const char* const kBoundaryCsvHeader;
extern const char* const kWernerCsvHeader;

}  // namespace qudit::io
