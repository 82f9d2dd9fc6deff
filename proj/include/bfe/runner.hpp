#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bfe {

/// Command-line overrides applied on top of the configuration document.
struct CliOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;  // "csv" or "json"
  std::optional<int> jobs;
  std::vector<std::string> inputs;    // analyze: trace files (overrides config)
};

/// Subcommand drivers. They throw ConfigError for bad configuration and
/// std::runtime_error/-derived for runtime failures; run_cli maps those to
/// exit codes 2 and 3.
void cmd_estimate(const CliOptions& options);
void cmd_lock(const CliOptions& options);
void cmd_scaling(const CliOptions& options);
void cmd_analyze(const CliOptions& options);

/// Full argument parsing and dispatch; returns the process exit code
/// (0 success, 2 configuration error, 3 runtime error).
int run_cli(const std::vector<std::string>& args);

}  // namespace bfe
