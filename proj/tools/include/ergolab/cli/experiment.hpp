#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ergolab/cli/config.hpp"

namespace ergolab::cli {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitInconclusive = 3, kExitRuntime = 4 };

struct Artifact {
  std::string name;
  std::string content;
};

struct RunResult {
  int exit_code = kExitOk;
  Json summary;
  std::vector<Artifact> artifacts;
};

// Runs one experiment. Invalid configurations throw std::logic_error
// subclasses; runtime failures propagate as the library throws them.
RunResult run_experiment(const ExperimentConfig& config);

// summary.json plus the artifacts, written into `dir` (created if missing).
void write_outputs(const RunResult& result, const std::string& dir);

std::string render_summary(const Json& summary);

}  // namespace ergolab::cli
