#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qudit::cli {

enum class Command {
  basis,
  tensors,
  check,
  entropy,
  qutrit_region,
  werner,
  convert,
  verify_su4,
  random,
};

enum class Format { json, csv };

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kUnphysical = 2;

struct CommandConfig {
  Command command = Command::basis;
  int N = 2;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::string output;           // empty: write to the output stream
  std::optional<Format> format; // empty: the command's default
  std::string input;            // state JSON path, "-" for stdin
  int resolution = 512;
  std::optional<double> alpha_min;  // default -N
  std::optional<double> alpha_max;  // default N
  int steps = 2401;
  std::string boundary_output;  // qutrit-region: boundary-curve CSV path
  int boundary_samples = 512;
  std::string kind = "pure";    // random: pure | mixed | bipartite-pure | bipartite-mixed
  int count = 1;
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command command);

/// Runs one command. Reports go to `config.output` when set and to `out`
/// otherwise; errors are written to `err` as a single JSON object.
int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// {"error": kind, "message": text} on one line.
void write_error(std::ostream& err, const std::string& kind, const std::string& message);

}  // namespace qudit::cli
