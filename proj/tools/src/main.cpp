#include <CLI11.hpp>

#include <iostream>

#include "hessgame/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hessgame: Dirichlet problems for lambda_j(D^2 u) = 0"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir;
  const std::pair<const char*, const char*> commands[] = {
      {"solve", "Solve the dynamic programming equation on a grid"},
      {"simulate", "Solve, then play the game with greedy strategies"},
      {"check-domain", "Sampled checks of the boundary conditions G, F and H"},
      {"envelope", "Convex or concave envelopes of boundary data"},
      {"mvp-check", "Mean value expansion table for the test catalog"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "YAML experiment file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--out-dir", out_dir, "Output directory (overrides output.dir)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hessgame::cli::kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return hessgame::cli::run_file(config_path, command, out_dir, std::cerr);
}
