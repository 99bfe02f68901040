#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mkdv {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitBlowUp = 4,
};

struct CommandOptions {
  std::string verb;
  std::filesystem::path config;
  std::filesystem::path out_dir = "mkdvlab-out";
  std::optional<std::uint64_t> seed;  ///< overrides the config's "seed"
  std::optional<int> threads;         ///< worker count for sweeps and multilinear sums
};

/// solve, energy-track, verify-estimates, b4-check, scaling, linear-window, apriori.
const std::vector<std::string>& command_verbs();

/// Runs one verb. Human-readable summaries go to out; failures are reported
/// on err as one JSON object and mapped to ExitCode values.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace mkdv
