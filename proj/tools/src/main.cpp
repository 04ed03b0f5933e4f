#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qudit/cli.hpp"

int main(int argc, char** argv) {
  using namespace qudit::cli;

  CLI::App app{"Density-matrix toolkit for qudits in the generalized Gell-Mann basis"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandConfig config;
  std::string format;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  CLI::Option* alpha_min_opt = nullptr;
  CLI::Option* alpha_max_opt = nullptr;

  app.add_option("--N", config.N, "Qudit dimension")->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Numerical tolerance")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--output", config.output, "Write the report to this file");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  const std::map<std::string, std::string> help{
      {"basis", "Export the generalized Gell-Mann matrices"},
      {"tensors", "Export the f and d structure tensors"},
      {"check", "Physicality, invariants and purity of a state JSON"},
      {"entropy", "Von Neumann entropy of a state JSON"},
      {"qutrit-region", "Admissible (|P|, Q) grid for a qutrit as CSV"},
      {"werner", "Werner-state purity consistency and positivity scan"},
      {"convert", "Two-qubit components <-> SU(4) Bloch vector"},
      {"verify-su4", "Check the SU(4) generator / Pauli-product identities"},
      {"random", "Sample random states"},
  };
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    if (name == "check" || name == "entropy" || name == "convert") {
      sub->add_option("--input", config.input, "State JSON file, '-' for stdin")->required();
    }
    if (name == "qutrit-region") {
      sub->add_option("--resolution", config.resolution, "Grid points per axis")
          ->capture_default_str();
      sub->add_option("--boundary-output", config.boundary_output,
                      "Write boundary-curve samples to this CSV");
      sub->add_option("--boundary-samples", config.boundary_samples, "Samples per curve")
          ->capture_default_str();
    }
    if (name == "werner") {
      alpha_min_opt = sub->add_option("--alpha-min", alpha_min, "Scan start (default -N)");
      alpha_max_opt = sub->add_option("--alpha-max", alpha_max, "Scan end (default N)");
      sub->add_option("--steps", config.steps, "Scan points")->capture_default_str();
    }
    if (name == "random") {
      sub->add_option("--kind", config.kind, "pure, mixed, bipartite-pure or bipartite-mixed")
          ->capture_default_str();
      sub->add_option("--count", config.count, "Number of samples")->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    write_error(std::cerr, "invalid_argument", e.what());
    return kInvalidInput;
  }

  const CLI::App* sub = app.get_subcommands().front();
  config.command = *parse_command(sub->get_name());
  if (!format.empty()) config.format = format == "csv" ? Format::csv : Format::json;
  if (alpha_min_opt->count() > 0) config.alpha_min = alpha_min;
  if (alpha_max_opt->count() > 0) config.alpha_max = alpha_max;
  return run(config, std::cin, std::cout, std::cerr);
}
