#pragma once

#include <ostream>
#include <string>

#include "hessgame/cli/config.hpp"

namespace hessgame::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNonConvergence = 3,
  kExitInvariant = 4,
};

/// Runs one experiment, writing the field/table CSV, the JSON summary and the
/// resolved config under config.output.dir. Returns an ExitCode.
int run(const ExperimentConfig& config, std::ostream& log);

/// Loads, validates and runs; configuration problems are reported on `log`.
int run_file(const std::string& path, const std::string& command, const std::string& out_dir, std::ostream& log);

}  // namespace hessgame::cli
